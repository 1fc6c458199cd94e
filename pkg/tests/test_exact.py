import random
from fractions import Fraction as F

import pytest

from nordenlight.exact import (
    DenseTensor,
    ShapeError,
    format_rational,
    kernel_basis,
    mat_rank,
    parse_rational,
    primitive_integer_vector,
    signature,
    solve_affine,
    tensor_contract,
)


class TestRationalGrammar:
    def test_round_trip(self):
        for text in ["0", "4", "-7", "3/4", "-3/4", "123456789012345678901/7"]:
            assert format_rational(parse_rational(text)) == text

    def test_reduction_and_positive_denominator(self):
        assert format_rational(parse_rational("6/4")) == "3/2"
        assert format_rational(parse_rational("-6/4")) == "-3/2"
        assert format_rational(parse_rational("8/4")) == "2"

    @pytest.mark.parametrize("bad", ["1/0", "1.5", "a", "1/-2", "--3", "3/", "/4", ""])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_canonical_form_random(self):
        rng = random.Random(7)
        for _ in range(200):
            num = rng.randint(-10**6, 10**6)
            den = rng.randint(1, 10**6)
            q = parse_rational(f"{num}/{den}")
            assert q.denominator > 0
            from math import gcd

            assert gcd(abs(q.numerator), q.denominator) == 1
            assert parse_rational(format_rational(q)) == q


class TestKernelBasis:
    def test_explicit_kernel(self):
        m = [[0, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert kernel_basis(m) == [(F(1), F(0), F(0))]

    def test_associated_gram_kernel(self, golden):
        # Gram matrix of the associated metric on the hypersurface span:
        # only nonzero entry pairs the second and fourth basis fields.
        _, ns, _ = golden
        idx = (1, 2, 3)  # X2, X3, X4 (0-based)
        gram = [
            [ns.g_assoc[a][b] for b in idx]
            for a in idx
        ]
        assert gram[0][2] == F(-1) and gram[2][0] == F(-1)
        assert kernel_basis(gram) == [(F(0), F(1), F(0))]

    def test_injective(self):
        m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert kernel_basis(m) == []

    def test_kernel_invariants_random(self):
        rng = random.Random(11)
        for _ in range(150):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = [[F(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
            basis = kernel_basis(m)
            assert mat_rank(m) + len(basis) == cols
            for v in basis:
                assert all(
                    sum(m[r][c] * v[c] for c in range(cols)) == 0 for r in range(rows)
                )
            if basis:
                assert mat_rank(basis) == len(basis)


class TestSolveAffine:
    def test_constant_curvature_fit(self, golden):
        # The curvature of the curved fixture fits the two curvature-type
        # tensors with unique coefficients (4, 0).
        _, _, amb = golden
        diff = amb.pi1 - amb.pi2
        rows = list(zip(diff.entries, amb.pi3.entries))
        sol = solve_affine(rows, list(amb.riemann04.entries))
        assert sol.kind == "unique"
        assert sol.particular == (F(4), F(0))

    def test_zero_matrix_zero_rhs(self):
        sol = solve_affine([[0, 0], [0, 0]], [0, 0])
        assert sol.kind == "parametric"
        assert sol.particular == (F(0), F(0))
        assert len(sol.nullspace) == 2

    def test_zero_matrix_nonzero_rhs(self):
        sol = solve_affine([[0, 0], [0, 0]], [1, 0])
        assert sol.kind == "infeasible"
        assert sol.particular is None

    def test_unique_iff_injective_and_exact(self):
        rng = random.Random(13)
        for _ in range(150):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 4)
            a = [[F(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
            x_true = [F(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(cols)]
            b = [sum(a[r][c] * x_true[c] for c in range(cols)) for r in range(rows)]
            sol = solve_affine(a, b)
            assert sol.kind != "infeasible"
            assert (sol.kind == "unique") == (kernel_basis(a) == [])
            assert all(
                sum(a[r][c] * sol.particular[c] for c in range(cols)) == b[r]
                for r in range(rows)
            )
            if sol.kind == "unique":
                assert sol.nullspace == ()


class TestTensorContract:
    def test_j_composed_with_j(self, golden):
        _, ns, _ = golden
        j = DenseTensor.from_rows(ns.j)
        jj = tensor_contract(j, 1, j, 0)
        expected = DenseTensor.from_function((4, 4), lambda i, k: -1 if i == k else 0)
        assert jj == expected

    def test_connection_slice(self, golden):
        # Contract the connection with the second basis field in the
        # derivative slot: the resulting table holds D_{X2}, whose value on
        # X2 is -2 X3.
        _, _, amb = golden
        x2 = DenseTensor.from_vector([0, 1, 0, 0])
        table = tensor_contract(x2, 0, amb.gamma, 0)
        assert table.dims == (4, 4)
        assert table[1, 2] == F(-2)  # D_{X2} X2 has X3-coefficient -2
        assert table[1, 0] == 0 and table[1, 1] == 0 and table[1, 3] == 0

    def test_zero_tensor(self):
        z = DenseTensor.zeros((3, 3))
        t = DenseTensor.from_function((3, 3), lambda i, j: i + j)
        assert tensor_contract(t, 1, z, 0).is_zero()

    def test_shape_error(self):
        a = DenseTensor.zeros((2, 2))
        b = DenseTensor.zeros((3, 3))
        with pytest.raises(ShapeError, match="shape"):
            tensor_contract(a, 1, b, 0)

    def test_bilinearity_random(self):
        rng = random.Random(17)
        for _ in range(100):
            dims = (2, 2)
            t = DenseTensor.from_function(dims, lambda *ix: rng.randint(-3, 3))
            u = DenseTensor.from_function(dims, lambda *ix: rng.randint(-3, 3))
            w = DenseTensor.from_function(dims, lambda *ix: rng.randint(-3, 3))
            alpha = F(rng.randint(-3, 3), rng.choice([1, 2, 3]))
            beta = F(rng.randint(-3, 3), rng.choice([1, 2, 3]))
            lhs = tensor_contract(t, 1, u.scale(alpha) + w.scale(beta), 0)
            rhs = tensor_contract(t, 1, u, 0).scale(alpha) + tensor_contract(t, 1, w, 0).scale(beta)
            assert lhs == rhs

    def test_rank_arithmetic(self):
        t = DenseTensor.zeros((2, 2, 2))
        u = DenseTensor.zeros((2, 2))
        assert tensor_contract(t, 2, u, 0).rank == 3
        v = DenseTensor.from_vector([1, 2])
        assert tensor_contract(v, 0, v, 0).rank == 0


class TestSignature:
    def test_neutral_plane(self):
        assert signature([[0, -1], [-1, 0]]) == (1, 1, 0)

    def test_degenerate(self):
        assert signature([[0, 0, -1], [0, 0, 0], [-1, 0, 0]]) == (1, 1, 1)

    def test_random_congruence_invariance(self):
        from nordenlight.exact import mat_mul, transpose
        from helpers import random_unimodular

        rng = random.Random(19)
        for _ in range(50):
            n = 3
            m = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
            sym = [[m[i][k] + m[k][i] for k in range(n)] for i in range(n)]
            s = random_unimodular(rng, n)
            conj = mat_mul(mat_mul(transpose(s), sym), s)
            assert signature(sym) == signature(conj)


class TestPrimitive:
    def test_scaling(self):
        assert primitive_integer_vector((F(0), F(-1, 2), F(0), F(-3, 2))) == (
            F(0),
            F(1),
            F(0),
            F(3),
        )

    def test_leading_sign(self):
        assert primitive_integer_vector((F(-2), F(4))) == (F(1), F(-2))
