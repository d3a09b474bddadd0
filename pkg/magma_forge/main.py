import click
from dotenv import load_dotenv

from magma_forge import caps  # 상한값 확장
from magma_forge.commands.analyze import analyze
from magma_forge.commands.construct import construct
from magma_forge.commands.count import count
from magma_forge.utils.helpers import logger

# 환경 변수 로드
load_dotenv()

# 상한값 초기화
caps.init_app()
logger.debug(f"Desk caps: table={caps.table}, groups={caps.group_order}, aut={caps.aut_order}")


@click.group()
@click.version_option("0.1.0", prog_name="magma-forge")
def cli():
    """일반화된 가위바위보 마그마 도구"""


# 명령 등록
cli.add_command(construct)
cli.add_command(count)
cli.add_command(analyze)

# CLI 실행
if __name__ == "__main__":
    cli()
