"""Shared helpers: random models for oracle tests and class samplers."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import settings

from hkcones.errors import IncompleteExceptionalData, NotPseudoEffective
from hkcones.fixtures import builtin
from hkcones.lattice import DivisorClass, NSLattice
from hkcones.model import ExceptionalClass, HKModel
from hkcones.walk import base_loci
from hkcones.zariski import brute_force_decompose, decompose

settings.register_profile("hkcones", deadline=None, derandomize=True)
settings.load_profile("hkcones")

RANK2 = ("hilb2-s1", "hilb2-s2", "hilb2-s3", "fano-cubic-scroll", "k3-two-curves")


def vec(*xs):
    return DivisorClass(tuple(F(x) for x in xs))


@pytest.fixture
def s1():
    return builtin("hilb2-s1")


@pytest.fixture
def ht():
    return builtin("fano-cubic-scroll")


def random_model(rng, max_rank=4, max_exc=6):
    """A random valid model: diag(+, -, ..., -) form, ample e0, exceptionals pairwise >= 0."""
    r = rng.randint(2, max_rank)
    diag = [rng.randint(1, 6)] + [-rng.randint(1, 6) for _ in range(r - 1)]
    gram = tuple(tuple(diag[i] if i == j else 0 for j in range(r)) for i in range(r))
    lat = NSLattice(gram)
    ample = DivisorClass.basis_vector(r, 0)

    def q(x, y):
        return sum(diag[i] * x[i] * y[i] for i in range(r))

    excs = []
    target = rng.randint(1, max_exc)
    for _ in range(200):
        if len(excs) >= target:
            break
        v = [rng.randint(1, 3)] + [rng.randint(-4, 4) for _ in range(r - 1)]
        if q(v, v) >= 0:
            continue
        if any(q(v, e) < 0 for e in excs):
            continue
        if any(all(F(a) * e[0] == F(e_) * v[0] for a, e_ in zip(v, e)) for e in excs):
            continue
        excs.append(v)
    exceptionals = tuple(
        ExceptionalClass(f"E{i}", DivisorClass(tuple(F(x) for x in v)), F(rng.choice([1, 1, 2]))) for i, v in enumerate(excs)
    )
    return HKModel(2 * rng.randint(1, 2), lat, ample, exceptionals, (), None, False, "random")


def random_psef(rng, model):
    """Positive-cone class plus a non-negative combination of exceptionals."""
    r = model.rank
    a = model.ample
    base = a * rng.randint(0, 4)
    for i in range(1, r):
        base = base + DivisorClass.basis_vector(r, i) * F(rng.randint(-3, 3), rng.randint(1, 3))
    # push into the closed positive cone along the ample class
    while model.q(base) < 0 or model.q(base, a) <= 0:
        base = base + a
    if rng.random() < 0.2:
        base = DivisorClass.zero(r)
    d = base
    for e in model.exceptionals:
        if rng.random() < 0.6:
            d = d + e.ray * F(rng.randint(0, 6), rng.randint(1, 4))
    return d


def sample_big(model, rng, count, bound=40):
    """``count`` random integral big classes."""
    from hkcones.cones import membership

    out = []
    while len(out) < count:
        d = DivisorClass(tuple(F(rng.randint(-bound, bound)) for _ in range(model.rank)))
        if d.is_zero():
            continue
        if membership(model, d).big:
            out.append(d)
    return out


def run_oracle(count, seed=20261019):
    """decompose vs brute force on random models; returns (agreements, error agreements)."""
    rng = random.Random(seed)
    agreed = errors = 0
    while agreed < count:
        model = random_model(rng)
        for _ in range(10):
            d = random_psef(rng, model)
            try:
                fast = decompose(model, d)
            except IncompleteExceptionalData:
                with pytest.raises((IncompleteExceptionalData, NotPseudoEffective)):
                    brute_force_decompose(model, d)
                errors += 1
                continue
            assert brute_force_decompose(model, d) == fast, (model, d)
            agreed += 1
    return agreed, errors


def check_report(model, d, fan=None):
    rep = base_loci(model, d, fan)
    plus, minus = rep.labels("b_plus"), rep.labels("b_minus")
    # B_- = B for big classes, and B_- is inside B_+
    assert rep.b == rep.b_minus
    assert minus <= plus
    assert rep.stable == (plus == minus)
    dec = decompose(model, d)
    null = {e.name for e in model.exceptionals if model.q(dec.positive, e.ray) == 0}
    assert {c.label for c in rep.b_plus if c.divisorial} == null
    assert {c.label for c in rep.b_minus if c.divisorial} == set(dec.support)
    for c in rep.b_plus + rep.b_minus:
        assert c.dim >= model.n
    if model.rank == 2:
        kinds = {c.divisorial for c in rep.b_plus}
        assert len(kinds) <= 1
    return rep


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines at the end of the run."""
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
