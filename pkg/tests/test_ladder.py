import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvekit.errors import LadderError
from curvekit.ladder import (
    Ladder,
    canonical_form,
    mirror,
    parse_ladder,
    pred1,
    random_ladder,
    rotate_columns,
    rotate_labels,
    serialize,
    succ1,
)

L10 = Ladder((1, 5, 9, 3, 2, 6, 10, 4, 7, 6), (10, 4, 8, 2, 1, 5, 9, 3, 8, 7))


def valid_ladders(max_n=8):
    """Random valid ladders via the junction-permutation construction."""

    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n).filter(lambda k: k != 2))
        seed = draw(st.integers(0, 2**32 - 1))
        import random

        return random_ladder(n, random.Random(seed))

    return build()


def test_succ_pred_wrap():
    assert succ1(10, 10) == 1
    assert pred1(1, 10) == 10
    assert succ1(3, 7) == 4
    assert pred1(4, 7) == 3


def test_l10_is_valid():
    L10.validate()
    assert L10.n == 10


def test_l10_junctions():
    assert L10.junction_values() == (10, 4, 8, 2, 1, 5, 9, 3, 7, 6)
    assert L10.junction_column(7) == 9
    assert L10.label_slots(6) == ((6, "top"), (10, "top"))
    assert L10.label_slots(10) == ((1, "bottom"), (7, "top"))


def test_one_column_torus_ladder():
    lad = Ladder((1,), (1,))
    lad.validate()
    assert lad.junction_values() == (1,)


def test_length_mismatch():
    with pytest.raises(LadderError) as exc:
        Ladder((1, 2, 3), (1, 2)).validate()
    assert exc.value.code == "LENGTH_MISMATCH"


def test_label_count_errors():
    with pytest.raises(LadderError) as exc:
        Ladder((1, 1, 1), (2, 3, 2)).validate()
    assert exc.value.code == "LABEL_COUNT"
    with pytest.raises(LadderError) as exc:
        Ladder((1, 2, 4), (2, 4, 1)).validate()
    assert exc.value.code == "LABEL_COUNT"


def test_consecutivity_error():
    with pytest.raises(LadderError) as exc:
        Ladder((1, 3, 2), (3, 1, 2)).validate()
    assert exc.value.code == "CONSECUTIVITY"


def test_every_two_column_ladder_is_rejected():
    # {k, k+1} mod 2 is {1, 2} in every column, so both columns claim the
    # same junction pair and the column map can never be a bijection.
    seen = set()
    for top in [(1, 2), (2, 1), (1, 1), (2, 2)]:
        for bot in [(1, 2), (2, 1), (1, 1), (2, 2)]:
            try:
                Ladder(top, bot).validate()
                seen.add((top, bot))
            except LadderError:
                pass
    assert not seen


def test_parse_rejects_bad_syntax():
    for text in ["1,2\n", "1,x\n2,1\n", "1,2,\n2,1\n", ""]:
        with pytest.raises(LadderError) as exc:
            parse_ladder(text)
        assert exc.value.code in ("SYNTAX", "LENGTH_MISMATCH")


def test_parse_serialize_round_trip():
    text = serialize(L10)
    assert text == "1,5,9,3,2,6,10,4,7,6\n10,4,8,2,1,5,9,3,8,7\n"
    assert parse_ladder(text) == L10
    assert parse_ladder("# comment\n" + text) == L10


def test_rotations_preserve_validity():
    for a in range(1, 10):
        rotate_labels(L10, a).validate()
    for b in range(1, 10):
        rotate_columns(L10, b).validate()


def test_canonical_form_idempotent_and_invariant():
    c = canonical_form(L10)
    c.canonical_ladder.validate()
    assert canonical_form(c.canonical_ladder).canonical_ladder == c.canonical_ladder
    for a in range(10):
        for b in range(0, 10, 3):
            moved = rotate_columns(rotate_labels(L10, a), b)
            assert canonical_form(moved).canonical_ladder == c.canonical_ladder


def test_canonical_form_reports_applied_rotations():
    c = canonical_form(L10)
    rebuilt = rotate_columns(
        rotate_labels(L10, c.applied_rotation_v), c.applied_rotation_w
    )
    assert rebuilt == c.canonical_ladder


def test_mirror_is_involutive():
    m = mirror(L10)
    m.validate()
    assert m != L10
    assert mirror(m) == L10


def test_random_ladder_rejects_n2():
    import random

    with pytest.raises(ValueError):
        random_ladder(2, random.Random(0))


@settings(max_examples=120, deadline=None)
@given(valid_ladders())
def test_random_ladders_validate_and_round_trip(lad):
    lad.validate()
    assert parse_ladder(serialize(lad)) == lad


@settings(max_examples=60, deadline=None)
@given(valid_ladders())
def test_canonical_form_closes_orbit(lad):
    canon = canonical_form(lad).canonical_ladder
    canon.validate()
    assert canonical_form(rotate_labels(lad, 1)).canonical_ladder == canon
    if lad.n > 1:
        assert canonical_form(rotate_columns(lad, 1)).canonical_ladder == canon


@settings(max_examples=60, deadline=None)
@given(valid_ladders())
def test_junction_bijection(lad):
    vals = lad.junction_values()
    assert sorted(vals) == list(range(1, lad.n + 1))
    for j in range(1, lad.n + 1):
        pair = {lad.top_at(j), lad.bottom_at(j)}
        assert pair == {vals[j - 1], succ1(vals[j - 1], lad.n)}
