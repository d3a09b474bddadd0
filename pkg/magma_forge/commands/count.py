import json
import sys

import click

from magma_forge.core.arithmetic import (
    admissible,
    count_kset_partitions,
    count_regular_partitions,
    gcd_of_binomials,
)
from magma_forge.core.census import (
    brute_enumerate_prps,
    brute_enumerate_rps,
    brute_iso_classes_max_arity_cyclic,
    count_iso_classes_max_arity_cyclic,
    count_prps,
    count_regular_rps,
    count_rps,
    prps_factors,
    regular_rps_factors,
    rps_factors,
)
from magma_forge.core.construct import enumerate_sign_functions
from magma_forge.core.groups import cyclic_group
from magma_forge.errors import MagmaForgeError
from magma_forge.utils.helpers import handle_domain_error, logger

KINDS = ["prps", "regular", "rps", "partitions", "iso-classes", "gcd", "admissible"]


def _need(**values):
    missing = [f"--{name}" for name, value in values.items() if value is None]
    if missing:
        raise click.UsageError(f"this count needs {', '.join(missing)}")
    return values.values()


def _evaluate(kind, m, n, p, s, k, oracle, threads):
    """(value, per-k factors or None, oracle value or None)"""
    if kind == "prps":
        m, n = _need(m=m, n=n)
        factors = prps_factors(m, n)
        return count_prps(m, n), factors, brute_enumerate_prps(m, n, threads) if oracle else None
    if kind == "regular":
        m, n = _need(m=m, n=n)
        factors = regular_rps_factors(m, n)
        check = sum(1 for _ in enumerate_sign_functions(cyclic_group(m), n)) if oracle else None
        return count_regular_rps(m, n), factors, check
    if kind == "rps":
        m, n = _need(m=m, n=n)
        factors = rps_factors(m, n)
        return count_rps(m, n), factors, brute_enumerate_rps(m, n, threads) if oracle else None
    if kind == "iso-classes":
        (p,) = _need(p=p)
        check = brute_iso_classes_max_arity_cyclic(p) if oracle else None
        return count_iso_classes_max_arity_cyclic(p), None, check
    if oracle:
        raise click.UsageError(f"no brute-force oracle for {kind}")
    if kind == "partitions":
        (m,) = _need(m=m)
        if s is not None:
            return count_regular_partitions(m, s), None, None
        (k,) = _need(k=k)
        return count_kset_partitions(m, k), None, None
    if kind == "gcd":
        m, n = _need(m=m, n=n)
        return gcd_of_binomials(m, n), None, None
    m, n = _need(m=m, n=n)
    return admissible(m, n).admissible, None, None


def _render(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@click.command()
@click.argument("kind", type=click.Choice(KINDS))
@click.option("--m", "m", type=int, help="universe order")
@click.option("--n", "n", type=int, help="arity")
@click.option("--p", "p", type=int, help="odd prime (iso-classes)")
@click.option("--s", "s", type=int, help="set size (partitions)")
@click.option("--k", "k", type=int, help="k-set size (partitions)")
@click.option("--proof", is_flag=True, help="print the per-k factors")
@click.option("--oracle", is_flag=True, help="also run the brute-force enumeration")
@click.option("--threads", type=int, default=1, show_default=True, help="worker processes for oracles")
@click.option("--json", "as_json", is_flag=True)
def count(kind, m, n, p, s, k, proof, oracle, threads, as_json):
    """정확한 개수 계산"""
    try:
        value, factors, check = _evaluate(kind, m, n, p, s, k, oracle, threads)
    except MagmaForgeError as e:
        message, code = handle_domain_error(e)
        click.echo(f"error: {message}", err=True)
        sys.exit(code)
    match = check is None or check == value
    logger.info(f"count {kind}: {value}")
    if as_json:
        payload = {"kind": kind, "count": _render(value)}
        if proof and factors is not None:
            payload["factors"] = {str(i): str(f) for i, f in enumerate(factors, start=1)}
        if check is not None:
            payload["oracle"] = str(check)
            payload["match"] = match
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        line = _render(value)
        if check is not None:
            line += f" (oracle: {check}, {'MATCH' if match else 'MISMATCH'})"
        click.echo(line)
        if proof and factors is not None:
            for i, f in enumerate(factors, start=1):
                click.echo(f"k={i}: {f}")
    if not match:
        sys.exit(1)
