"""Plain-text formats for magmas, pointings, hypertournaments, groups and sign functions."""
from sympy.combinatorics import Permutation

from magma_forge.core.construct import sign_function
from magma_forge.core.groups import make_group
from magma_forge.core.hypertournaments import PointedHypertournament
from magma_forge.core.ksets import format_kset
from magma_forge.core.magma import Pointing, make_magma
from magma_forge.errors import ParseError
from magma_forge.utils.helpers import logger, safe_int


def _lines(text):
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _header(lines, *kinds):
    try:
        head = next(lines).split()
    except StopIteration:
        raise ParseError("empty input")
    if head[0] not in kinds:
        raise ParseError(f"expected a '{' or '.join(kinds)}' header, got {head[0]!r}")
    return head[0], [safe_int(v, "header field") for v in head[1:]]


# 마그마
def format_magma(A):
    m = A.order
    rows = A.table.reshape(-1, m)
    body = "\n".join(" ".join(str(int(v)) for v in row) for row in rows)
    return f"magma {m} {A.arity}\n{body}\n"


def parse_magma(text):
    lines = _lines(text)
    _, fields = _header(lines, "magma")
    if len(fields) != 2:
        raise ParseError("magma header needs order and arity")
    m, n = fields
    entries = [safe_int(v, "table entry") for line in lines for v in line.split()]
    return make_magma(m, n, entries)


# 포인팅 / 하이퍼토너먼트
def format_pointing(p, kind="pointing"):
    lines = [f"{kind} {p.order} {p.arity}"]
    lines += [f"{format_kset(kset)} -> {w}" for kset, w in p.items()]
    return "\n".join(lines) + "\n"


def parse_pointing(text):
    lines = _lines(text)
    _, fields = _header(lines, "pointing", "htour")
    if len(fields) != 2:
        raise ParseError("pointing header needs order and arity")
    m, n = fields
    mapping = {}
    for line in lines:
        if "->" not in line:
            raise ParseError(f"expected 'u1 ... uk -> w', got {line!r}")
        left, right = line.split("->", 1)
        kset = tuple(sorted(safe_int(v, "k-set member") for v in left.split()))
        if kset in mapping:
            raise ParseError(f"k-set {kset} listed twice")
        mapping[kset] = safe_int(right, "winner")
    return Pointing.from_mapping(m, n, mapping)


def format_hypertournament(T):
    return format_pointing(T.pointing, kind="htour")


def parse_hypertournament(text):
    p = parse_pointing(text)
    return PointedHypertournament(p.order, p.arity, p)


# 그룹
def format_group(G):
    rows = "\n".join(" ".join(str(int(v)) for v in row) for row in G.table)
    return f"group {G.order} {G.identity}\n{rows}\n"


def parse_group(text):
    lines = _lines(text)
    _, fields = _header(lines, "group")
    if len(fields) != 2:
        raise ParseError("group header needs order and identity")
    m, identity = fields
    entries = [safe_int(v, "table entry") for line in lines for v in line.split()]
    if len(entries) != m * m:
        raise ParseError(f"group table has {len(entries)} entries, expected {m * m}")
    return make_group([entries[i * m:(i + 1) * m] for i in range(m)], identity)


# 부호 함수
def format_sign(lam):
    lines = [f"sign {lam.order} {lam.arity}"]
    lines += [f"{len(chosen)}: {format_kset(chosen)}" for _, chosen in lam.choices]
    return "\n".join(lines) + "\n"


def parse_chosen_sets(text):
    """The 'k: u1 ... uk' lines of a sign file; the header is optional."""
    chosen = []
    for line in _lines(text):
        if line.startswith("sign"):
            continue
        if ":" not in line:
            raise ParseError(f"expected 'k: u1 ... uk', got {line!r}")
        k, members = line.split(":", 1)
        kset = tuple(sorted(safe_int(v, "k-set member") for v in members.split()))
        if len(kset) != safe_int(k, "k"):
            raise ParseError(f"line {line!r} lists {len(kset)} members")
        chosen.append(kset)
    return chosen


def parse_sign(text, G):
    lines = _lines(text)
    _, fields = _header(lines, "sign")
    if len(fields) != 2:
        raise ParseError("sign header needs order and arity")
    m, n = fields
    if m != G.order:
        raise ParseError(f"sign function is for order {m}, group has order {G.order}")
    lam = sign_function(G, n, parse_chosen_sets(text))
    logger.info(f"Read sign function with {len(lam.choices)} choices")
    return lam


# 출력 보조
def format_permutation(phi):
    cycles = Permutation(list(phi)).cyclic_form
    return "".join("(" + " ".join(str(x) for x in cycle) + ")" for cycle in cycles) or "()"


def format_kset_list(ksets):
    return " | ".join(format_kset(U) for U in ksets)
