# magma_forge/utils/caps.py
import os

from magma_forge.errors import CapExceeded

DEFAULT_TABLE_CAP = 10 ** 7
DEFAULT_GROUP_CAP = 60
DEFAULT_AUT_CAP = 12
DEFAULT_ENUM_CAP = 10 ** 6
DEFAULT_CON_CAP = 64


class DeskCaps:
    """데스크 규모 상한값 (환경 변수로 덮어쓰기 가능)"""

    def __init__(self):
        self.table = DEFAULT_TABLE_CAP
        self.group_order = DEFAULT_GROUP_CAP
        self.aut_order = DEFAULT_AUT_CAP
        self.enumeration = DEFAULT_ENUM_CAP
        self.congruence_order = DEFAULT_CON_CAP

    def init_app(self, environ=None):
        env = os.environ if environ is None else environ
        self.table = int(env.get("MAGMA_FORGE_CAP", self.table))
        self.group_order = int(env.get("MAGMA_FORGE_GROUP_CAP", self.group_order))
        self.aut_order = int(env.get("MAGMA_FORGE_AUT_CAP", self.aut_order))
        self.enumeration = int(env.get("MAGMA_FORGE_ENUM_CAP", self.enumeration))
        self.congruence_order = int(env.get("MAGMA_FORGE_CON_CAP", self.congruence_order))
        return self

    def aut_cap_for(self, arity):
        # 항수가 커질수록 탐색 공간이 급격히 커짐
        if arity <= 2:
            return self.aut_order
        if arity == 3:
            return min(self.aut_order, 9)
        return min(self.aut_order, 7)

    def check(self, what, size, cap=None):
        limit = self.table if cap is None else cap
        if size > limit:
            raise CapExceeded(f"{what} has size {size}, above the desk cap {limit}")
        return size
