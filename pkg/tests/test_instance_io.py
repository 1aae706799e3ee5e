"""Tests for the instance grammar and the result renderers."""

from fractions import Fraction as F

import pytest

from ukp_fptas.exceptions import EmptyInstanceError, InstanceParseError
from ukp_fptas.harness import parse_instance, parse_result, render_instance, render_result
from ukp_fptas.model import SolutionMultiset
from ukp_fptas.solver import solve


class TestParseInstance:

    def test_star(self, star, star_text):
        assert parse_instance(star_text) == star

    def test_capacity_scaling(self):
        instance = parse_instance("c 2\nitem 1 1")
        assert (instance.items[0].profit, instance.items[0].size) == (F(1), F(1, 2))

    def test_default_capacity_and_comments(self):
        instance = parse_instance("# header\n\nitem 0.5 0.4  # a1\nitem 3/10 7/20\n")
        assert [(i.profit, i.size) for i in instance.items] == [(F(1, 2), F(2, 5)), (F(3, 10), F(7, 20))]

    def test_oversized_dropped(self):
        instance = parse_instance("item 1/2 2\nitem 1/4 1/2")
        assert len(instance) == 1
        assert instance.dropped == 1
        assert instance.items[0].index == 1

    @pytest.mark.parametrize("text,line", [
        ("item 0 1/2", 1),
        ("item 1/2 -1", 1),
        ("item 3/2 1/2", 1),
        ("c 1\nitem 1/2", 2),
        ("c 1\nc 1\nitem 1/2 1/2", 2),
        ("item 1/2 1/2\nbox 1", 2),
        ("item x 1/2", 1),
        ("c 0\nitem 1/2 1/2", 1),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(InstanceParseError) as info:
            parse_instance(text)
        assert info.value.line_number == line
        assert str(info.value).startswith(f"line {line}:")

    def test_nonpositive_profit_message(self):
        with pytest.raises(InstanceParseError, match="nonpositive profit"):
            parse_instance("item 0 1/2")

    @pytest.mark.parametrize("text", ["", "# nothing\n", "c 1\n", "item 1 2"])
    def test_empty(self, text):
        with pytest.raises(EmptyInstanceError):
            parse_instance(text)


class TestRender:

    def test_render_instance_parses_back(self, star):
        text = render_instance(star)
        assert text.splitlines()[:2] == ["# 3 items", "c 1/1"]
        assert "item 3/50 1/20" in text
        assert parse_instance(text) == star

    def test_machine_result(self, star):
        text = render_result(solve(star, F(1, 4)), 'machine')
        lines = text.splitlines()
        assert lines[:3] == ["profit 31/25", "size 1/1", "branch dp-combined"]
        assert "take 0 2" in lines
        assert "take 2 4" in lines
        assert "counter tuples 10" in lines

    def test_machine_result_parses_back(self, star):
        result = solve(star, F(1, 4))
        parsed = parse_result(render_result(result, 'machine'))
        assert parsed['profit'] == F(31, 25)
        assert parsed['size'] == F(1)
        assert parsed['branch'] == 'dp-combined'
        assert parsed['takes'] == {0: 2, 2: 4}
        assert parsed['counters'] == result.stats.as_dict()
        retotaled = SolutionMultiset.from_counts(parsed['takes'], star.by_index())
        assert (retotaled.total_profit, retotaled.total_size) == (result.profit, result.solution.total_size)

    def test_text_result(self, star):
        text = render_result(solve(star, F(1, 4)), 'text')
        assert "Profit: 31/25" in text
        assert "Epsilon: 1/4 (kappa=3)" in text
        assert "item 2 x 4" in text

    def test_parse_result_rejects_garbage(self):
        with pytest.raises(InstanceParseError):
            parse_result("profit 1/2\nweird line here")
