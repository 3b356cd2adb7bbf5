import math

import pytest

import bcx


def test_scalar_algebra():
    a = bcx.from_cartesian(complex(1, 2), complex(3, -4))
    b = bcx.Bicomplex(2.0)
    prod = a * b
    assert abs(prod.z1 - 2 * a.z1) < 1e-14
    z, w = bcx.to_cartesian(a)
    assert abs(z - complex(1, 2)) < 1e-14
    assert abs(w - complex(3, -4)) < 1e-14

    j = bcx.unit_j()
    jj = j * j
    assert abs(jj.z1 + 1.0) < 1e-15
    mk = bcx.modulus_k(3.0 * bcx.e1() + 4.0 * bcx.e2())
    assert mk.x1 == pytest.approx(3.0)
    assert mk.x2 == pytest.approx(4.0)


def test_null_cone_raises():
    with pytest.raises(bcx.BcxError):
        bcx.inverse(bcx.e1())


def test_matrix_norms():
    ident = bcx.BCMatrix.identity(3)
    rep = bcx.op_dnorm(ident)
    assert rep.dnorm.x1 == pytest.approx(1.0)
    assert rep.dnorm.x2 == pytest.approx(1.0)
    assert rep.euclid == pytest.approx(1.0)
    assert bcx.is_normal(ident)
    assert bcx.is_unitary(ident)


def test_hardy_and_littlewood():
    # phi(0) = 0.6 e1 + 0.8 e2 gives the frozen bound (2, 3)
    phi = bcx.mobius_series(0.6 * bcx.e1() + 0.8 * bcx.e2(), 32)
    bound = bcx.littlewood_bound(phi)
    assert bound.x1 == pytest.approx(2.0, rel=1e-12)
    assert bound.x2 == pytest.approx(3.0, rel=1e-12)

    nrm = bcx.op_dnorm(bcx.composition_matrix(phi, 32)).dnorm
    assert nrm.x1 <= bound.x1 + 1e-9
    assert nrm.x2 <= bound.x2 + 1e-9

    f = bcx.PowerSeries([bcx.Bicomplex(1.0), bcx.Bicomplex(1.0)])
    h = bcx.hardy_norm(f)
    assert h.x1 == pytest.approx(math.sqrt(2.0))

    c = bcx.compose(f, phi.series, 8)
    assert c.degree() == 8


def test_run_verify():
    report = bcx.run_verify(seed=5, trials=10, dim=3, degree=8,
                            suites=["algebra", "littlewood"])
    assert report["overall_pass"] is True
    names = [s["suite"] for s in report["suites"]]
    assert names == ["algebra", "littlewood"]
    again = bcx.run_verify(seed=5, trials=10, dim=3, degree=8,
                           suites=["algebra", "littlewood"])
    assert again == report
