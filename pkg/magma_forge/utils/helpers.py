import logging
import os

from magma_forge.errors import MagmaForgeError, ParseError

# 로깅 설정
logging.basicConfig(level=os.getenv("MAGMA_FORGE_LOG_LEVEL", "WARNING").upper())
logger = logging.getLogger("magma_forge")


def safe_int(text, what="value"):
    """정수로 안전하게 변환"""
    try:
        return int(str(text).strip())
    except ValueError:
        logger.warning(f"Invalid integer for {what}: {text!r}")
        raise ParseError(f"invalid integer for {what}: {text!r}")


def parse_int_list(text, what="list"):
    """'1,2,3' 형태의 목록을 정수 리스트로 변환"""
    parts = [p for p in str(text).replace(" ", "").split(",") if p]
    if not parts:
        raise ParseError(f"empty {what}")
    return [safe_int(p, what) for p in parts]


def handle_domain_error(e):
    """도메인 에러 처리"""
    if isinstance(e, MagmaForgeError):
        logger.error(f"Domain error {e.name}: {e}")
        return f"{e.name}: {e}", 1
    logger.error(f"Unexpected error: {e}")
    return f"{type(e).__name__}: {e}", 1
