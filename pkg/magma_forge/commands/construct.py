import sys

import click

from magma_forge.core.construct import (
    build_regular,
    canonical_lambda,
    convex_lambda,
    correlated_lambda,
    primitive_root_lambda,
    simple_lambda,
)
from magma_forge.core.groups import cyclic_group, direct_sum, generated_subgroup, semidirect_cyclic
from magma_forge.core.magma import extract_pointing
from magma_forge.errors import DomainError, MagmaForgeError, ParseError
from magma_forge.utils.formats import format_magma, format_pointing, format_sign, parse_chosen_sets, parse_group, parse_sign
from magma_forge.utils.helpers import handle_domain_error, logger, parse_int_list, safe_int


def parse_group_spec(spec):
    """cyclic:m | sum:m1,m2,... | semidirect:m,k,t | file:path"""
    kind, _, rest = spec.partition(":")
    if kind == "cyclic":
        return cyclic_group(safe_int(rest, "cyclic order"))
    if kind == "sum":
        return direct_sum([cyclic_group(m) for m in parse_int_list(rest, "summand orders")])
    if kind == "semidirect":
        values = parse_int_list(rest, "semidirect parameters")
        if len(values) != 3:
            raise ParseError("semidirect needs m,k,t")
        return semidirect_cyclic(*values)
    if kind == "file":
        with open(rest, encoding="utf-8") as handle:
            return parse_group(handle.read())
    raise ParseError(f"unknown group spec {spec!r}")


def _read(path):
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def resolve_lambda(G, n, source):
    """canonical | file:path | primitive-root | simple:p,k | correlated[:seedfile] | convex:generator"""
    kind, _, rest = source.partition(":")
    if kind == "canonical":
        return canonical_lambda(G, n)
    if kind == "file":
        return parse_sign(_read(rest), G)
    if kind == "primitive-root":
        if G != cyclic_group(G.order):
            raise DomainError("primitive-root needs a cyclic group")
        return primitive_root_lambda(G.order, n)
    if kind == "simple":
        values = parse_int_list(rest, "simple parameters")
        if len(values) != 2:
            raise ParseError("simple needs p,k")
        p, k = values
        if G != cyclic_group(p ** k):
            raise DomainError(f"simple:{p},{k} needs the group cyclic:{p ** k}")
        return simple_lambda(p, k, n)
    if kind == "correlated":
        seeds = parse_chosen_sets(_read(rest)) if rest else []
        return correlated_lambda(G, n, seeds)
    if kind == "convex":
        H = generated_subgroup(G, [safe_int(rest, "generator")])
        return convex_lambda(G, n, H)
    raise ParseError(f"unknown lambda source {source!r}")


@click.command()
@click.option("--group", "group_spec", required=True, help="cyclic:m, sum:m1,m2,..., semidirect:m,k,t or file:path")
@click.option("--arity", "-n", type=int, required=True)
@click.option("--lambda", "lambda_source", default="canonical", show_default=True,
              help="canonical, file:path, primitive-root, simple:p,k, correlated[:seedfile] or convex:generator")
@click.option("--emit-pointing", is_flag=True, help="write the pointing instead of the table")
@click.option("--emit-sign", is_flag=True, help="write the sign function instead of the table")
@click.option("--output", "-o", type=click.File("w", encoding="utf-8"), default="-")
def construct(group_spec, arity, lambda_source, emit_pointing, emit_sign, output):
    """정규 RPS 마그마 G_n(lambda) 생성"""
    try:
        G = parse_group_spec(group_spec)
        lam = resolve_lambda(G, arity, lambda_source)
        if emit_sign:
            output.write(format_sign(lam))
            return
        A = build_regular(G, arity, lam)
        output.write(format_pointing(extract_pointing(A)) if emit_pointing else format_magma(A))
        logger.info(f"Constructed {G.name} magma of arity {arity} from {lambda_source}")
    except (MagmaForgeError, OSError) as e:
        message, code = handle_domain_error(e)
        click.echo(f"error: {message}", err=True)
        sys.exit(code)
