import json
import sys
from functools import wraps

import click

from magma_forge.commands.construct import parse_group_spec
from magma_forge.core.analysis import all_congruences, automorphisms, is_simple
from magma_forge.core.construct import enumerate_obverse_classes
from magma_forge.core.hypertournaments import (
    double_tournament,
    embed_regular,
    is_balanced,
    random_tournament,
    verify_embedding,
)
from magma_forge.core.lattice import is_distributive
from magma_forge.core.magma import classify, from_pointing, isomorphic
from magma_forge.core.terms import check_identity, evaluate, parse_term
from magma_forge.errors import MagmaForgeError, ParseError
from magma_forge.utils.formats import (
    format_hypertournament,
    format_kset_list,
    format_magma,
    format_permutation,
    parse_hypertournament,
    parse_magma,
    parse_pointing,
)
from magma_forge.utils.helpers import handle_domain_error, logger, parse_int_list

json_option = click.option("--json", "as_json", is_flag=True, help="machine-readable output")


def _bool(value):
    return "true" if value else "false"


def _emit(as_json, payload, lines):
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def domain_errors(func):
    """도메인 에러를 stderr로 출력하고 종료 코드 1 반환"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (MagmaForgeError, OSError) as e:
            message, code = handle_domain_error(e)
            click.echo(f"error: {message}", err=True)
            sys.exit(code)

    return wrapper


def load_magma(handle):
    """magma 파일 또는 pointing/htour 파일을 마그마로 읽기"""
    text = handle.read()
    for line in text.splitlines():
        head = line.split("#", 1)[0].split()
        if not head:
            continue
        if head[0] in ("pointing", "htour"):
            return from_pointing(parse_pointing(text))
        break
    return parse_magma(text)


@click.group()
def analyze():
    """마그마 분석 명령 모음"""


@analyze.command()
@click.argument("magma_file", type=click.File("r", encoding="utf-8"), default="-")
@json_option
@domain_errors
def verify(magma_file, as_json):
    """다섯 가지 성질 판정"""
    report = classify(load_magma(magma_file))
    flags = report.flags()
    payload = {name: value for name, value in flags.items()}
    payload["per_k_counts"] = [[str(c) for c in row] for row in report.per_k_counts]
    _emit(as_json, payload, [f"{name}: {_bool(value)}" for name, value in flags.items()])


@analyze.command()
@click.argument("magma_file", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--list", "show", is_flag=True, help="print every automorphism in cycle notation")
@json_option
@domain_errors
def aut(magma_file, show, as_json):
    """자기동형군"""
    found = automorphisms(load_magma(magma_file))
    lines = [f"order {len(found)}"]
    if show:
        lines += [format_permutation(phi) for phi in found]
    payload = {"order": str(len(found)), "automorphisms": [format_permutation(phi) for phi in found]}
    _emit(as_json, payload, lines)


@analyze.command()
@click.argument("magma_file", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--list", "show", is_flag=True, help="print every congruence as a block list")
@json_option
@domain_errors
def con(magma_file, show, as_json):
    """합동 격자"""
    L = all_congruences(load_magma(magma_file))
    distributive = is_distributive(L)
    lines = [f"size {len(L)}", f"distributive: {_bool(distributive)}"]
    if show:
        lines += [str(P) for P in L.elements]
    payload = {
        "size": str(len(L)),
        "distributive": distributive,
        "congruences": [str(P) for P in L.elements],
    }
    _emit(as_json, payload, lines)


@analyze.command()
@click.argument("magma_file", type=click.File("r", encoding="utf-8"), default="-")
@json_option
@domain_errors
def simple(magma_file, as_json):
    """단순성 판정"""
    result = is_simple(load_magma(magma_file))
    _emit(as_json, {"simple": result}, [f"simple: {_bool(result)}"])


def _assignment(values):
    return ",".join(f"x{i}={v}" for i, v in enumerate(values, start=1))


@analyze.command()
@click.argument("magma_file", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--lhs", required=True, help="term such as f(f(x1,f(x2,x3)),x3)")
@click.option("--rhs", required=True)
@click.option("--vars", "num_vars", type=int, default=None, help="number of variables (default: as used)")
@click.option("--at", "at", default=None, help="also evaluate both sides at a,b,c,...")
@json_option
@domain_errors
def identity(magma_file, lhs, rhs, num_vars, at, as_json):
    """항등식 검사"""
    A = load_magma(magma_file)
    left, right = parse_term(lhs), parse_term(rhs)
    result = check_identity(A, left, right, num_vars)
    if result.holds:
        lines = ["HOLDS"]
        payload = {"holds": True}
    else:
        lines = [f"FAILS at {_assignment(result.witness)}"]
        payload = {
            "holds": False,
            "witness": [str(v) for v in result.witness],
            "lhs": str(result.lhs_value),
            "rhs": str(result.rhs_value),
            "failures": str(result.failures),
        }
    if at is not None:
        point = parse_int_list(at, "assignment")
        if any(v < 0 or v >= A.order for v in point):
            raise ParseError(f"assignment {at!r} leaves 0..{A.order - 1}")
        lv, rv = evaluate(A, left, point), evaluate(A, right, point)
        lines.append(f"at {_assignment(point)}: lhs={lv} rhs={rv}")
        payload["at"] = {"assignment": [str(v) for v in point], "lhs": str(lv), "rhs": str(rv)}
    _emit(as_json, payload, lines)


@analyze.command()
@click.argument("htour_file", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--alphas", default=None, help="moduli a1,a2,... (default: least prime above the arity)")
@click.option("--output", "-o", type=click.File("w", encoding="utf-8"), default="-")
@domain_errors
def embed(htour_file, alphas, output):
    """하이퍼토너먼트를 정규 RPS 마그마에 임베딩"""
    T = parse_hypertournament(htour_file.read())
    moduli = parse_int_list(alphas, "moduli") if alphas else None
    A, witness = embed_regular(T, moduli)
    output.write(format_magma(A))
    output.write(f"# vertex map: {' '.join(str(v) for v in witness.vertex_map)}\n")
    output.write(f"# verified: {_bool(verify_embedding(witness))}\n")


@analyze.command()
@click.argument("htour_file", type=click.File("r", encoding="utf-8"), required=False)
@click.option("--random", "random_order", type=int, default=None, help="double a random tournament on R vertices")
@click.option("--rng-seed", type=int, default=0, show_default=True)
@click.option("--output", "-o", type=click.File("w", encoding="utf-8"), default="-")
@domain_errors
def double(htour_file, random_order, rng_seed, output):
    """토너먼트 두 배 확장"""
    if (htour_file is None) == (random_order is None):
        raise click.UsageError("give either a tournament file or --random R")
    if htour_file is not None:
        T = parse_hypertournament(htour_file.read())
    else:
        T = random_tournament(random_order, rng_seed)
    doubled, witness = double_tournament(T)
    output.write(format_hypertournament(doubled))
    output.write(f"# balanced: {_bool(is_balanced(doubled))}\n")
    output.write(f"# verified: {_bool(verify_embedding(witness))}\n")


@analyze.command()
@click.argument("first", type=click.File("r", encoding="utf-8"))
@click.argument("second", type=click.File("r", encoding="utf-8"))
@json_option
@domain_errors
def iso(first, second, as_json):
    """두 마그마의 동형 여부"""
    A, B = load_magma(first), load_magma(second)
    found = isomorphic(A, B) if A.order == B.order else None
    lines = [f"isomorphic: {_bool(found is not None)}"]
    payload = {"isomorphic": found is not None}
    if found is not None:
        lines.append("map " + " ".join(str(v) for v in found))
        payload["map"] = [str(v) for v in found]
    _emit(as_json, payload, lines)


@analyze.command()
@click.option("--group", "group_spec", required=True, help="cyclic:m, sum:m1,m2,..., semidirect:m,k,t or file:path")
@click.option("--arity", "-n", type=int, required=True)
@json_option
@domain_errors
def classes(group_spec, arity, as_json):
    """옵버스 클래스 목록"""
    G = parse_group_spec(group_spec)
    found = enumerate_obverse_classes(G, arity)
    logger.info(f"{G.name}: {len(found)} obverse classes for arity {arity}")
    lines = [f"{cls.k}: {format_kset_list(cls.members)}" for cls in found]
    payload = {"classes": [{"k": str(cls.k), "members": [list(map(str, U)) for U in cls.members]} for cls in found]}
    _emit(as_json, payload, lines)
