import decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ccpower.indices import banzhaf_coleman_cc, configuration_index, index_report
from ccpower.report import decimal_string, fraction_string, render_report


class TestDecimalString:
    @pytest.mark.parametrize(
        "value, places, expected",
        [
            (Fraction(1, 8), 3, "0.125"),
            (Fraction(1, 8), 2, "0.12"),   # tie -> even neighbour
            (Fraction(3, 8), 2, "0.38"),   # tie -> even neighbour
            (Fraction(1, 3), 6, "0.333333"),
            (Fraction(2, 3), 6, "0.666667"),
            (Fraction(0), 9, "0.000000000"),
            (Fraction(1), 4, "1.0000"),
            (Fraction(-1, 8), 2, "-0.12"),
            (Fraction(5, 2), 0, "2"),      # tie at the integer level
            (Fraction(7, 2), 0, "4"),
            (Fraction(1, 1024), 9, "0.000976562"),
        ],
    )
    def test_examples(self, value, places, expected):
        assert decimal_string(value, places) == expected

    def test_negative_places_rejected(self):
        with pytest.raises(ValueError):
            decimal_string(Fraction(1), -1)

    @given(
        num=st.integers(-10**6, 10**6),
        den=st.integers(1, 10**6),
        places=st.integers(0, 12),
    )
    def test_matches_decimal_module_half_even(self, num, den, places):
        value = Fraction(num, den)
        with decimal.localcontext() as ctx:
            ctx.prec = 60
            quantum = decimal.Decimal(1).scaleb(-places)
            expected = (
                decimal.Decimal(num) / decimal.Decimal(den)
            ).quantize(quantum, rounding=decimal.ROUND_HALF_EVEN)
        assert decimal_string(value, places) == f"{expected:f}"

    @given(
        num=st.integers(0, 10**9),
        den=st.integers(1, 10**9),
        places=st.integers(0, 12),
    )
    def test_reparse_within_half_ulp(self, num, den, places):
        value = Fraction(num, den)
        printed = decimal_string(value, places)
        assert abs(Fraction(printed) - value) <= Fraction(1, 2 * 10**places)


class TestRenderedFormats:
    @pytest.fixture()
    def rendered(self, textbook):
        report = index_report(
            textbook,
            beta=banzhaf_coleman_cc(textbook),
            phi=configuration_index(textbook),
        )
        return render_report(report)

    def test_csv_schema(self, rendered):
        lines = rendered.as_csv().splitlines()
        assert lines[0] == "player,label,weight,beta,phi"
        assert lines[1] == "1,player 1,1,0.125000000,0.111111111"
        assert len(lines) == 5

    def test_table_contains_blocks_column(self, rendered):
        table = rendered.as_table()
        assert "blocks" in table.splitlines()[0]
        assert "1,2,3" in table  # player 3 sits in all three blocks

    def test_json_structure(self, rendered):
        import json

        doc = json.loads(rendered.as_json())
        assert [p["player"] for p in doc["players"]] == [1, 2, 3, 4]
        assert doc["players"][2]["blocks"] == [1, 2, 3]
        assert doc["players"][2]["beta"] == "0.375000000"

    def test_exact_rendering(self, textbook):
        report = index_report(textbook, beta=banzhaf_coleman_cc(textbook), phi=None)
        rendered = render_report(report, exact=True)
        betas = [line.split(",")[-1] for line in rendered.as_csv().splitlines()[1:]]
        assert betas == ["1/8", "1/4", "3/8", "1/8"]

    def test_single_index_drops_missing_column(self, textbook):
        report = index_report(textbook, beta=None, phi=configuration_index(textbook))
        lines = render_report(report, precision=7).as_csv().splitlines()
        assert lines[0] == "player,label,weight,phi"
        assert lines[1].endswith("0.1111111")

    def test_custom_precision(self, textbook):
        report = index_report(textbook, beta=banzhaf_coleman_cc(textbook), phi=None)
        lines = render_report(report, precision=3).as_csv().splitlines()
        assert lines[1].endswith("0.125")
        assert lines[2].endswith("0.250")

    def test_fraction_string(self):
        assert fraction_string(Fraction(3, 8)) == "3/8"
        assert fraction_string(Fraction(1)) == "1"
