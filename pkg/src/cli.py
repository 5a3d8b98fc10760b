"""
Command-line interface.

Usage:
    python main.py verdict --p 13 --e 2 --t 3            # single tuple
    python main.py order --p 13 --e 2 --t 3              # valuation profile
    python main.py cf --a 8 --p 13                       # continued fraction and E
    python main.py survey --p-max 7 --e-max 1 --format csv
    python main.py verify --suite all --max-p 50
    python main.py reduce --matrix model.json            # reduction method
    python main.py compare --p 13 --e 2 --t 3            # dihedral vs cyclic over M

Exit codes: 0 success, 1 failed verification, 2 invalid input, 3 I/O error.
"""
import logging
import sys
from typing import Any, Dict, List, Optional

import click

from . import __version__
from .algorithms.assocorder import build_profile, ring_conditions
from .algorithms.cfrac import cf_expand, e_set_bruteforce
from .algorithms.ramification import classify, validate
from .algorithms.redmethod import basis_from_reduced, reduce as reduce_matrix
from .algorithms.suites import odd_primes, run_suite
from .algorithms.survey import build_record, survey as run_survey
from .algorithms.verdict import dihedral_verdict, tensoring_comparison
from .models.action_matrix import rows_to_strings
from .models.ramification import Closure
from .utils.config import Config
from .utils.data_handler import DataHandler
from .utils.exceptions import FreenessError, ParameterError

__all__ = ["cli"]

logger = logging.getLogger(__name__)

CLOSURE = click.Choice([c.value for c in Closure])


def _fail(exc: FreenessError) -> None:
    click.echo(DataHandler.dumps(exc.to_dict()), err=True)
    sys.exit(Config.EXIT_USAGE)


def _emit(data: Any, fmt: str = 'json') -> None:
    if fmt == 'json':
        click.echo(DataHandler.dumps(data))
        return
    for key, value in data.items():
        if isinstance(value, list):
            value = ' '.join(map(str, value))
        click.echo(f"{key}: {value}")


def tuple_options(func):
    """Shared --p/--e/--t/--closure/--totally-ramified options."""
    func = click.option('--totally-ramified', type=click.BOOL, default=True, show_default=True,
                        help='Whether the normal closure is totally ramified')(func)
    func = click.option('--closure', type=CLOSURE, default=Closure.DIHEDRAL.value, show_default=True,
                        help='Galois group of the normal closure')(func)
    func = click.option('--t', 't', type=int, required=True, help='Ramification jump')(func)
    func = click.option('--e', 'e', type=int, required=True, help='Absolute ramification index')(func)
    func = click.option('--p', 'p', type=int, required=True, help='Odd prime degree')(func)
    return func


@click.group()
@click.version_option(version=__version__, prog_name="freeness")
@click.option('--verbose', '-v', is_flag=True, help='Debug logging on standard error')
def cli(verbose: bool):
    """Freeness of rings of integers over their associated orders in degree p."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


@cli.command()
@tuple_options
@click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default='json', show_default=True)
@click.option('--cross-check', is_flag=True, help='Attach the residue-pattern certificate')
def verdict(p: int, e: int, t: int, closure: str, totally_ramified: bool, fmt: str, cross_check: bool):
    """Decide freeness for one (p, e, t) tuple."""
    try:
        rd = validate(p, e, t, Closure(closure), totally_ramified)
        data: Dict[str, Any] = build_record(rd).to_dict()
        if cross_check and rd.is_dihedral_total:
            checks = dihedral_verdict(rd, cross_check=True).cross_checks
            if checks is not None:
                data['cross_checks'] = checks
    except FreenessError as exc:
        _fail(exc)
    _emit(data, fmt)


@cli.command()
@tuple_options
def order(p: int, e: int, t: int, closure: str, totally_ramified: bool):
    """Valuation profile of the associated order."""
    try:
        rd = validate(p, e, t, Closure(closure), totally_ramified)
        if rd.a == 0:
            data: Dict[str, Any] = {'ramification': rd.to_dict(), 'maximal': True}
        else:
            profile = build_profile(rd)
            data = {'ramification': rd.to_dict(), 'maximal': False, 'profile': profile.to_dict()}
            if rd.is_dihedral_total:
                data['band'] = classify(rd).value
                data['ring_conditions'] = ring_conditions(rd, profile.nu).to_dict()
    except FreenessError as exc:
        _fail(exc)
    _emit(data)


@cli.command()
@click.option('--a', 'a', type=int, required=True, help='Numerator')
@click.option('--p', 'p', type=int, required=True, help='Odd prime denominator')
def cf(a: int, p: int):
    """Continued fraction of a/p with its convergents, and E when 1 <= a < p."""
    try:
        expansion = cf_expand(a, p)
        data = expansion.to_dict()
        if 1 <= a < p:
            data['E'] = e_set_bruteforce(a, p).to_list()
    except FreenessError as exc:
        _fail(exc)
    _emit(data)


def _prime_list(p_list: Optional[str], p_max: Optional[int]) -> List[int]:
    if p_list:
        try:
            return [int(x) for x in p_list.replace(';', ',').split(',') if x.strip()]
        except ValueError as exc:
            raise ParameterError(f"bad --p-list: {p_list}") from exc
    if p_max is None:
        raise ParameterError("one of --p-list or --p-max is required")
    return odd_primes(p_max + 1)


@cli.command()
@click.option('--p-list', help='Comma-separated odd primes')
@click.option('--p-max', type=int, help='Every odd prime up to this bound')
@click.option('--e-max', type=int, required=True, help='Largest absolute ramification index')
@click.option('--closure', type=CLOSURE, default=Closure.DIHEDRAL.value, show_default=True)
@click.option('--totally-ramified', type=click.BOOL, default=True, show_default=True)
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default='json', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default='-', help="Output file ('-' for stdout)")
@click.option('--workers', type=int, default=Config.DEFAULT_WORKERS, show_default=True)
def survey(p_list: Optional[str], p_max: Optional[int], e_max: int, closure: str,
           totally_ramified: bool, fmt: str, out: str, workers: int):
    """One record per valid tuple, ordered by (p, e, t)."""
    try:
        primes = _prime_list(p_list, p_max)
        records = run_survey(primes, e_max, Closure(closure), totally_ramified, workers)
    except FreenessError as exc:
        _fail(exc)
    try:
        if fmt == 'csv':
            DataHandler.export_csv(records, out)
        else:
            DataHandler.export_json(records, out)
    except OSError as exc:
        click.echo(DataHandler.dumps({'error': 'IOError', 'message': str(exc)}), err=True)
        sys.exit(Config.EXIT_IO)


@cli.command()
@click.option('--suite', type=click.Choice(Config.SUITE_NAMES + ('all',)), default='all', show_default=True)
@click.option('--max-p', type=int, default=Config.DEFAULT_MAX_P, show_default=True)
@click.option('--seed', type=int, default=Config.DEFAULT_SEED, show_default=True)
@click.option('--trials', type=int, default=Config.DEFAULT_TRIALS, show_default=True)
@click.option('--full', is_flag=True, help='List passing checks too')
def verify(suite: str, max_p: int, seed: int, trials: int, full: bool):
    """Run invariant suites; exit 1 if any property fails."""
    try:
        results = run_suite(suite, max_p, seed, trials)
    except FreenessError as exc:
        _fail(exc)
    _emit([result.to_dict(include_passed=full) for result in results])
    if not all(result.success for result in results):
        sys.exit(Config.EXIT_VERIFY_FAILED)


@cli.command(name='reduce')
@click.option('--matrix', 'matrix_path', type=click.Path(dir_okay=False), required=True,
              help='JSON file with "blocks" (entries "num/den") and optionally "p"')
@click.option('--p', 'p', type=int, default=None, help='Prime (overrides the file)')
def reduce_cmd(matrix_path: str, p: Optional[int]):
    """Reduce an action matrix to [D; 0] and print the associated-order basis."""
    try:
        matrix, file_p = DataHandler.read_action_matrix(matrix_path)
    except OSError as exc:
        click.echo(DataHandler.dumps({'error': 'IOError', 'message': str(exc)}), err=True)
        sys.exit(Config.EXIT_IO)
    except (FreenessError, ValueError) as exc:
        _fail(exc if isinstance(exc, FreenessError) else ParameterError(str(exc)))
    try:
        prime = p if p is not None else file_p
        if prime is None:
            raise ParameterError("no prime given in the file or on the command line")
        pair = reduce_matrix(matrix, prime)
        basis = basis_from_reduced(pair)
    except FreenessError as exc:
        _fail(exc)
    data = pair.to_dict()
    data['basis'] = rows_to_strings(basis)
    _emit(data)


@cli.command()
@click.option('--p', 'p', type=int, required=True)
@click.option('--e', 'e', type=int, required=True)
@click.option('--t', 't', type=int, required=True)
def compare(p: int, e: int, t: int):
    """Dihedral verdict over K next to the cyclic verdict over the quadratic field."""
    try:
        comparison = tensoring_comparison(p, e, t)
    except FreenessError as exc:
        _fail(exc)
    _emit(comparison.to_dict())


if __name__ == "__main__":
    cli()
