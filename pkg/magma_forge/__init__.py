from magma_forge.utils.caps import DeskCaps

caps = DeskCaps()  # 환경 변수는 main에서 init_app으로 반영
