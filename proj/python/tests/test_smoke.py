import numpy as np
import pytest

g = pytest.importorskip("gf2e_py")


def ref_mul(a, b, e, f):
    acc = 0
    for i in range(e):
        if (b >> i) & 1:
            acc ^= a
        a <<= 1
        if a >> e:
            a ^= f
    return acc


def ref_matmul(a, b, e, f):
    m, k = a.shape
    n = b.shape[1]
    c = np.zeros((m, n), dtype=np.uint16)
    for i in range(m):
        for j in range(n):
            s = 0
            for l in range(k):
                s ^= ref_mul(int(a[i, l]), int(b[l, j]), e, f)
            c[i, j] = s
    return c


@pytest.mark.parametrize("e", [2, 3, 5, 8, 10])
def test_backends_match_reference(e):
    a = g.Matrix.random(e, 9, 13, seed=e)
    b = g.Matrix.random(e, 13, 6, seed=e + 100)
    expected = ref_matmul(a.to_numpy(), b.to_numpy(), e, a.modulus)
    for backend in ["cubic", "nj", "strassen", "karatsuba", "auto"]:
        c = g.multiply(a, b, backend=backend, crossover=4)
        assert np.array_equal(c.to_numpy(), expected), backend
    assert np.array_equal((a @ b).to_numpy(), expected)


def test_numpy_round_trip_and_indexing():
    arr = np.array([[5, 2], [3, 1]], dtype=np.uint16)
    a = g.Matrix.from_numpy(3, arr)
    assert a.shape == (2, 2)
    assert a[0, 0] == 5
    a[1, 1] = 7
    assert a.to_numpy()[1, 1] == 7
    with pytest.raises((IndexError, ValueError)):
        a[0, 0] = 8


def test_gf8_slices():
    a = g.Matrix.from_numpy(3, np.array([[5, 2], [3, 1]]))
    s = g.slice(a)
    assert [x.astype(int).tolist() for x in s] == [[[1, 0], [1, 1]], [[0, 1], [1, 0]], [[1, 0], [0, 0]]]


def test_ple_reconstructs():
    a = g.Matrix.random(4, 30, 20, seed=3)
    p, l, ech, q, rank = g.ple(a, crossover=4)
    assert rank == 20
    prod = (l @ ech).to_numpy()
    for i in reversed(range(len(p))):
        prod[[i, p[i]]] = prod[[p[i], i]]
    assert np.array_equal(prod, a.to_numpy())


def test_echelonize_and_trsm():
    ident = g.Matrix.identity(6, 12)
    r, rank = g.echelonize(ident)
    assert rank == 12 and r == ident
    z = g.Matrix(6, 5, 7)
    assert g.echelonize(z)[1] == 0

    u = g.Matrix.random(6, 10, 10, seed=1).to_numpy()
    u = np.triu(u)
    np.fill_diagonal(u, 1)
    u = g.Matrix.from_numpy(6, u)
    b = g.Matrix.random(6, 10, 3, seed=2)
    x = g.trsm_upper_left(u, b)
    assert u @ x == b
    l = g.Matrix.from_numpy(6, np.tril(np.ones((10, 10), dtype=np.uint16)))
    assert l @ g.trsm_lower_left(l, b) == b


def test_errors():
    with pytest.raises(g.FieldError):
        g.Field(4, 0b10101)
    with pytest.raises(g.SingularMatrixError):
        g.trsm_upper_left(g.Matrix(3, 2, 2), g.Matrix(3, 2, 1))
    with pytest.raises(g.ParseError):
        g.parse("not a matrix\n")


def test_counts_and_text_format():
    assert [g.count_products(e) for e in (2, 3, 4)] == [3, 6, 9]
    a = g.Matrix.random(7, 4, 5, seed=9)
    text = g.serialize(a)
    assert text.startswith("gf2e-mat v1 e=7 f=83 rows=4 cols=5 repr=packed\n")
    assert g.parse(text) == a
