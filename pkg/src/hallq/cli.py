"""Command-line front end: quiver ingestion, dispatch, cache, emission.

All primary output is valid JSON (default) or RFC-4180 CSV and is
byte-identical between warm and cold cache runs; errors go to stderr
with a machine-readable reason and a distinct exit code
(2 guard exceeded, 3 validation failure, 4 input error).
"""

from __future__ import annotations

import csv
import functools
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from .algebra import HallAlgebra
from .cache import HallCache
from .catalog import ModuleCatalog
from .errors import GuardExceeded, Guards, HallqError, InputError, ValidationFailure
from .gf import GF
from .hallpoly import HallPolynomialFitter, ModuleSpec, instantiate
from .hopf import ExtendedAlgebra
from .orders import DegenerationOrders
from .quiver import Quiver
from .reps import Representation


class Session:
    """Lazily constructed per-invocation computation context."""

    def __init__(self, quiver_path, q, guards, cache_dir, fmt, workers, volume):
        self.quiver_path = quiver_path
        self.q = q
        self.guards = guards
        self.cache_dir = cache_dir
        self.fmt = fmt
        self.workers = workers
        self.volume = volume

    @functools.cached_property
    def quiver(self) -> Quiver:
        if self.quiver_path is None:
            raise InputError("--quiver is required")
        return Quiver.load(self.quiver_path)

    @functools.cached_property
    def field(self) -> GF:
        if self.q is None:
            raise InputError("--q is required")
        return GF(self.q)

    @functools.cached_property
    def catalog(self) -> ModuleCatalog:
        return ModuleCatalog(self.quiver, self.field, self.guards)

    @functools.cached_property
    def cache(self):
        if self.cache_dir is None:
            return None
        return HallCache(self.cache_dir, self.quiver, self.field.q)

    @functools.cached_property
    def algebra(self) -> HallAlgebra:
        return HallAlgebra(self.catalog, self.cache)

    def parse_class(self, text: str):
        return instantiate(ModuleSpec.parse(self.quiver, text), self.catalog)

    def parse_dim(self, text: str):
        try:
            return self.quiver.dim([int(x) for x in text.split(",")])
        except ValueError as exc:
            raise InputError(f"bad dimension vector {text!r}: {exc}") from exc

    def finish(self):
        if self.cache_dir is not None and "cache" in self.__dict__ and self.cache:
            self.cache.flush()


def emit(session: Session, payload, csv_rows=None, csv_header=None) -> None:
    """JSON by default; CSV when requested and the command is tabular."""
    if session.fmt == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\r\n")
        if csv_header:
            writer.writerow(csv_header)
        for row in csv_rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        json.dump(payload, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")


def run_command(session: Session, fn) -> int:
    try:
        fn()
        session.finish()
        return 0
    except GuardExceeded as exc:
        _err("guard_exceeded", exc)
        return 2
    except ValidationFailure as exc:
        _err("validation_failure", exc)
        return 3
    except (InputError, HallqError) as exc:
        _err("input_error", exc)
        return 4


def _err(kind: str, exc: Exception) -> None:
    json.dump({"error": kind, "reason": str(exc)}, sys.stderr, sort_keys=True)
    sys.stderr.write("\n")


@click.group()
@click.option("--quiver", "quiver_path", type=click.Path(), help="quiver JSON file")
@click.option("--q", type=int, help="field size (prime power >= 2)")
@click.option("--cache-dir", default=None, help="Hall-number cache directory")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--scan-limit", type=int, default=Guards.scan_limit)
@click.option("--hom-limit", type=int, default=Guards.hom_limit)
@click.option("--subspace-limit", type=int, default=Guards.subspace_limit)
@click.option("--workers", type=int, default=1, help="thread pool width for hallpoly")
@click.option(
    "--pairing-volume",
    type=click.Choice(["dimension", "orbit"]),
    default="dimension",
    help="interpretation of |V_alpha| in the bilinear form",
)
@click.pass_context
def main(ctx, quiver_path, q, cache_dir, fmt, scan_limit, hom_limit, subspace_limit, workers, pairing_volume):
    """Exact Ringel-Hall algebra computations over finite fields."""
    if scan_limit <= 0 or hom_limit <= 0 or subspace_limit <= 0:
        raise click.UsageError("guards must be positive")
    if cache_dir is None:
        cache_dir = os.environ.get("HALLQ_CACHE_DIR") or None
    guards = Guards(scan_limit, hom_limit, subspace_limit)
    ctx.obj = Session(quiver_path, q, guards, cache_dir, fmt, workers, pairing_volume)


@main.command()
@click.argument("dim")
@click.pass_obj
def enumerate(session: Session, dim):
    """Iso-class table at a dimension vector."""

    def run():
        d = session.parse_dim(dim)
        classes = session.catalog.enumerate_classes(d)
        rows = [
            {
                "label": c.label,
                "dim": list(c.dim.entries),
                "end_dim": c.end_dim(),
                "aut_order": c.aut_order(),
                "orbit_dim": c.orbit_dim(),
            }
            for c in classes
        ]
        emit(
            session,
            {"dimension": list(d.entries), "count": len(rows), "classes": rows},
            csv_rows=[
                [r["label"], ",".join(map(str, r["dim"])), r["end_dim"], r["aut_order"], r["orbit_dim"]]
                for r in rows
            ],
            csv_header=["label", "dim", "end_dim", "aut_order", "orbit_dim"],
        )

    raise SystemExit(run_command(session, run))


@main.command()
@click.argument("l")
@click.argument("m")
@click.argument("n")
@click.pass_obj
def hallnum(session: Session, l, m, n):
    """Hall number g^L_{MN}."""

    def run():
        L, M, N = (session.parse_class(t) for t in (l, m, n))
        g = session.algebra.engine.hall_number(L, M, N)
        emit(session, g)

    raise SystemExit(run_command(session, run))


@main.command()
@click.argument("x")
@click.argument("y")
@click.pass_obj
def product(session: Session, x, y):
    """Twisted Hall product of two basis elements."""

    def run():
        X, Y = session.parse_class(x), session.parse_class(y)
        alg = session.algebra
        res = alg.product(alg.u(X), alg.u(Y))
        terms = res.to_json()
        emit(
            session,
            {"q": session.field.q, "x": X.label, "y": Y.label, "terms": terms},
            csv_rows=[[t["class"], t["a"], t["b"]] for t in terms],
            csv_header=["class", "a", "b"],
        )

    raise SystemExit(run_command(session, run))


@main.command()
@click.option("--untwisted", is_flag=True, help="negative control: twist forced to 1")
@click.pass_obj
def serre(session: Session, untwisted):
    """Verify the quantum Serre relations for all vertex pairs."""

    def run():
        alg = session.algebra
        results = {}
        for i in session.quiver.vertices:
            for j in session.quiver.vertices:
                if i != j:
                    results[f"{i},{j}"] = alg.serre_check(i, j, twisted=not untwisted)
        npairs = len(results)
        ok = all(results.values())
        payload = {
            "summary": f"{'PASS' if ok else 'FAIL'} ({npairs} vertex pairs)",
            "pairs": results,
            "twisted": not untwisted,
        }
        emit(session, payload)
        if not ok:
            raise ValidationFailure("Serre relations failed")

    raise SystemExit(run_command(session, run))


@main.command(name="e-components")
@click.argument("n", type=int)
@click.pass_obj
def e_components(session: Session, n):
    """The three regular-part components at degree n*delta."""

    def run():
        e1, e2, e3 = session.algebra.e_delta_components(n)
        emit(
            session,
            {
                "q": session.field.q,
                "n": n,
                "E1": e1.to_json(),
                "E2": e2.to_json(),
                "E3": e3.to_json(),
            },
        )

    raise SystemExit(run_command(session, run))


@main.command(name="pbw-rank")
@click.argument("degree")
@click.pass_obj
def pbw_rank(session: Session, degree):
    """PBW members at a degree: count, rank, rational graded dim."""

    def run():
        alg = session.algebra
        d = session.parse_dim(degree)
        members = alg.pbw_members_at(d)
        rank = alg.graded_rank(members, d)
        rat = alg.subalgebra_graded_dim(alg.rational_generators(d), d)
        emit(
            session,
            {
                "degree": list(d.entries),
                "members": len(members),
                "rank": rank,
                "rational_graded_dim": rat,
                "basis": rank == len(members) == rat,
            },
        )

    raise SystemExit(run_command(session, run))


@main.command()
@click.argument("l")
@click.argument("m")
@click.argument("n")
@click.option("--primes", default="2,3,5,7", help="comma-separated fit primes")
@click.option("--validate", "validation", type=int, default=11)
@click.pass_obj
def hallpoly(session: Session, l, m, n, primes, validation):
    """Interpolate the Hall polynomial of a field-independent spec triple."""

    def run():
        plist = [int(x) for x in primes.split(",")]
        triple = tuple(ModuleSpec.parse(session.quiver, t) for t in (l, m, n))
        fitter = HallPolynomialFitter(
            session.quiver, session.guards, cache_dir=session.cache_dir
        )
        if session.workers > 1:
            with ThreadPoolExecutor(max_workers=session.workers) as pool:
                list(pool.map(lambda q: fitter.evaluate(triple, q), plist))
        poly = fitter.fit(triple, plist, validation)
        fitter.flush_caches()
        emit(session, poly.to_json())

    raise SystemExit(run_command(session, run))


@main.command(name="hopf-check")
@click.argument("dim_bound", type=int)
@click.pass_obj
def hopf_check(session: Session, dim_bound):
    """Hopf axioms for every class with total dimension <= the bound."""

    def run():
        import itertools

        ext = ExtendedAlgebra(session.algebra, volume=session.volume)
        checked = []
        all_ok = True
        ranges = [range(dim_bound + 1)] * session.quiver.n
        for tup in itertools.product(*ranges):
            if not 0 < sum(tup) <= dim_bound:
                continue
            for lam in session.catalog.enumerate_classes(session.quiver.dim(tup)):
                ok = (
                    ext.hopf_axiom_check(lam)
                    and ext.counit_axiom_check(lam)
                    and ext.coassociativity_check(lam)
                )
                all_ok = all_ok and ok
                checked.append({"class": lam.label, "ok": ok})
        green_ok = True
        for i in session.quiver.vertices:
            for j in session.quiver.vertices:
                green_ok = green_ok and ext.green_compatibility_check(
                    session.catalog.simple_class(i), session.catalog.simple_class(j)
                )
        payload = {
            "dim_bound": dim_bound,
            "pairing_volume": session.volume,
            "classes_checked": len(checked),
            "antipode_counit_coassoc_ok": all_ok,
            "green_simple_pairs_ok": green_ok,
            "details": checked,
        }
        emit(session, payload)
        if not (all_ok and green_ok):
            raise ValidationFailure("Hopf axiom suite failed")

    raise SystemExit(run_command(session, run))


@main.command()
@click.argument("dim")
@click.pass_obj
def orders(session: Session, dim):
    """Extension-order vs hom-order agreement report at a dimension."""

    def run():
        d = session.parse_dim(dim)
        eng = session.algebra.engine
        report = DegenerationOrders(eng).orders_agree(d)
        emit(session, report)

    raise SystemExit(run_command(session, run))


@main.command()
@click.argument("rep")
@click.pass_obj
def classify(session: Session, rep):
    """Classify a module (label, or @file.json with a representation)."""

    def run():
        if rep.startswith("@"):
            with open(rep[1:]) as fh:
                r = Representation.from_json(session.quiver, json.load(fh))
            if r.field.q != session.field.q:
                raise InputError("representation field does not match --q")
            cls = session.catalog.classify_rep(r)
        else:
            cls = session.parse_class(rep)
        report = session.catalog.classify(cls)
        emit(session, {"label": cls.label, **report.to_json()})

    raise SystemExit(run_command(session, run))


@main.command(name="graded-gap")
@click.argument("n", type=int)
@click.pass_obj
def graded_gap(session: Session, n):
    """dim H^r - dim C at degree n*delta (the imaginary-layer gap)."""

    def run():
        alg = session.algebra
        tame = session.catalog.tame
        if tame is None:
            raise InputError("graded-gap requires a tame quiver")
        d = tame.delta * n
        rational = alg.subalgebra_graded_dim(alg.rational_generators(d), d)
        comp = alg.subalgebra_graded_dim(alg.composition_generators(), d)
        gap = rational - comp
        emit(
            session,
            {
                "summary": f"l = {gap}",
                "degree": list(d.entries),
                "rational_dim": rational,
                "composition_dim": comp,
                "gap": gap,
                "expected_tube_count": tame.tube_count,
            },
        )

    raise SystemExit(run_command(session, run))


if __name__ == "__main__":
    main()
