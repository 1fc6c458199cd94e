from fractions import Fraction as F

import pytest

from nordenlight.errors import ParseError
from nordenlight.manifold_file import (
    hypersurface_specs,
    lie_algebra_spec,
    norden_from_file,
    parse_manifold_file,
)

MINIMAL = """DIM 4
METRIC 1 1 = 1
METRIC 2 2 = 1
METRIC 3 3 = -1
METRIC 4 4 = -1
J 1 = 3:1
J 2 = 4:1
J 3 = 1:-1
J 4 = 2:-1
"""


class TestParsing:
    def test_golden_values(self, golden_mf):
        mf = golden_mf
        assert mf.dim == 4
        assert mf.basis_labels == ("X1", "X2", "X3", "X4")
        spec = lie_algebra_spec(mf)
        # [X1, X2] = -2 X4 with antisymmetric closure
        assert spec.brackets[0, 1, 3] == F(-2)
        assert spec.brackets[1, 0, 3] == F(2)
        assert spec.brackets[0, 1, 0] == F(0)
        ns = norden_from_file(mf)
        assert ns.g[0][0] == F(1) and ns.g[2][2] == F(-1)
        assert ns.j[2][0] == F(1)  # J X1 = X3
        assert ns.j[1][3] == F(-1)  # J X4 = -X2
        hs = hypersurface_specs(mf)[0]
        assert hs.inducing_metric == "associated"
        assert hs.xi_hint == (F(0), F(0), F(-1), F(0))

    def test_default_labels_and_zero_entries(self):
        mf = parse_manifold_file(MINIMAL)
        assert mf.basis_labels == ("X1", "X2", "X3", "X4")
        spec = lie_algebra_spec(mf)
        assert spec.brackets.is_zero()

    def test_comments_and_blank_lines(self):
        text = "# leading comment\n\nDIM 4  # trailing comment\n" + MINIMAL.split("\n", 1)[1]
        assert parse_manifold_file(text).dim == 4

    def test_round_trip(self, golden_mf, golden_text):
        assert parse_manifold_file(golden_mf.to_text()) == golden_mf

    def test_round_trip_minimal(self):
        mf = parse_manifold_file(MINIMAL)
        assert parse_manifold_file(mf.to_text()) == mf

    def test_multi_term_hint(self):
        text = MINIMAL + "HYPERSURFACE metric=assoc span=2,3,4 xi=1:1/2,3:-2\n"
        hs = hypersurface_specs(parse_manifold_file(text))[0]
        assert hs.xi_hint == (F(1, 2), F(0), F(-2), F(0))


class TestParseErrors:
    def expect_error(self, text, match, line=None):
        with pytest.raises(ParseError, match=match) as err:
            parse_manifold_file(text)
        if line is not None:
            assert err.value.line == line

    def test_zero_denominator(self):
        self.expect_error("DIM 4\nMETRIC 1 1 = 1/0\n", "zero denominator", line=2)

    def test_duplicate_bracket(self):
        self.expect_error(
            "DIM 4\nBRACKET 1 2 = 4:-2\nBRACKET 1 2 = 4:-2\n", "duplicate BRACKET", line=3
        )

    def test_mirrored_bracket_is_duplicate(self):
        self.expect_error(
            "DIM 4\nBRACKET 1 2 = 4:-2\nBRACKET 2 1 = 4:2\n", "duplicate BRACKET", line=3
        )

    def test_duplicate_metric(self):
        self.expect_error("DIM 4\nMETRIC 1 2 = 1\nMETRIC 2 1 = 1\n", "duplicate METRIC", line=3)

    def test_duplicate_j(self):
        self.expect_error("DIM 4\nJ 1 = 3:1\nJ 1 = 3:1\n", "duplicate J", line=3)

    def test_unknown_keyword(self):
        self.expect_error("DIM 4\nCURVATURE 1\n", "unknown keyword", line=2)

    def test_index_out_of_range(self):
        self.expect_error("DIM 4\nMETRIC 1 5 = 1\n", "out of range", line=2)

    def test_dim_must_come_first(self):
        self.expect_error("METRIC 1 1 = 1\n", "DIM must precede", line=1)

    def test_missing_dim(self):
        self.expect_error("# nothing\n", "missing DIM")

    def test_duplicate_dim(self):
        self.expect_error("DIM 4\nDIM 4\n", "duplicate DIM", line=2)

    def test_basis_count(self):
        self.expect_error("DIM 4\nBASIS a b\n", "BASIS needs 4 names", line=2)

    def test_span_arity(self):
        self.expect_error(
            MINIMAL + "HYPERSURFACE metric=assoc span=2,3\n", "span must list 3", line=10
        )

    def test_span_duplicate_index(self):
        self.expect_error(
            MINIMAL + "HYPERSURFACE metric=assoc span=2,2,4\n", "duplicate index", line=10
        )

    def test_bad_metric_selector(self):
        self.expect_error(
            MINIMAL + "HYPERSURFACE metric=dual span=2,3,4\n", "principal or assoc", line=10
        )

    def test_missing_span(self):
        self.expect_error(MINIMAL + "HYPERSURFACE metric=assoc\n", "needs span", line=10)

    def test_malformed_term(self):
        self.expect_error("DIM 4\nJ 1 = 3\n", "expected k:q", line=2)

    def test_duplicate_term_index(self):
        self.expect_error("DIM 4\nJ 1 = 3:1,\n", "expected k:q|malformed", line=2)
        self.expect_error("DIM 4\nBRACKET 1 2 = 3:1 3:2\n", "duplicate index", line=2)
