import pytest
from hypothesis import given, strategies as st

from orbinv import kernels as kmod
from orbinv.confun import _choices, _pack, gsets_up_to
from orbinv.cyclo import field
from orbinv.grp import abstract_group

BACKENDS = kmod.available()

needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")


def test_backend_selection(monkeypatch):
    assert kmod.load("python").BACKEND == "python"
    monkeypatch.setenv("ORBINV_PURE_PYTHON", "1")
    assert kmod.load().BACKEND == "python"
    with pytest.raises(ValueError):
        kmod.load("fortran")


@needs_both
@given(st.sampled_from([3, 5, 7, 8, 12, 15, 21]), st.data())
def test_mulmod_agrees(N, data):
    K = field(N)
    coeff = st.integers(-(2**40), 2**40) | st.integers(-20, 20)
    a = tuple(data.draw(st.lists(coeff, min_size=K.degree, max_size=K.degree)))
    b = tuple(data.draw(st.lists(coeff, min_size=K.degree, max_size=K.degree)))
    py, cy = kmod.load("python"), kmod.load("cython")
    assert py.poly_mulmod(a, b, K.reduction) == cy.poly_mulmod(a, b, K.reduction)


@needs_both
@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "Z2xZ4"])
def test_table_kernels_agree(name):
    G = abstract_group(name)
    py, cy = kmod.load("python"), kmod.load("cython")
    args = (G.rgen, G.parent, G.via, G.order)
    t1, i1 = py.cayley_table(*args)
    t2, i2 = cy.cayley_table(*args)
    assert list(t1) == list(t2) and list(i1) == list(i2)
    c1 = py.conjugacy_labels(t1, i1, G.order)
    c2 = cy.conjugacy_labels(t1, i1, G.order)
    assert [list(x) for x in c1] == [list(x) for x in c2]
    assert py.count_commuting_pairs(t1, G.order) == cy.count_commuting_pairs(t1, G.order)
    r1 = py.commuting_pair_orbits(t1, i1, G.order)
    r2 = cy.commuting_pair_orbits(t1, i1, G.order)
    assert [list(x) for x in r1] == [list(x) for x in r2]


@needs_both
@pytest.mark.parametrize("name", ["Z2", "S3", "Z2xZ2"])
def test_sweep_agrees(name):
    G = abstract_group(name)
    models = gsets_up_to(G, 4)
    py, cy = kmod.load("python"), kmod.load("cython")
    for S in models:
        for T in models:
            ps, pt = _pack(S), _pack(T)
            ch = _choices(S, T)
            args = (G.order, *ps, *pt[:5], ch)
            assert py.gset_sweep(*args) == cy.gset_sweep(*args)


@pytest.mark.parametrize("backend", BACKENDS)
def test_sweep_detects_corrupted_isotropy(backend):
    # a wrong target isotropy must surface as a stack-vs-fiber failure
    k = kmod.load(backend)
    G = abstract_group("Z2")
    S = gsets_up_to(G, 2)[0]
    ps = _pack(S)
    bad_stab = [s + 1 for s in ps[4]]
    res = k.gset_sweep(G.order, *ps, ps[0], ps[1], ps[2], ps[3], bad_stab, _choices(S, S))
    assert res[3] > 0 and res[4][0] == "stack-vs-fiber"
