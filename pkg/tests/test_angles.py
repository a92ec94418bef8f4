import math

import pytest

from qwparrondo.angles import AngleParseError, parse_angle

pi = math.pi


@pytest.mark.parametrize(
    "text, value",
    [
        ("pi", pi),
        ("pi/4", pi / 4),
        ("pi/6", pi / 6),
        ("5pi/12", 5 * pi / 12),
        ("5*pi/12", 5 * pi / 12),
        ("-pi/6", -pi / 6),
        ("+pi/2", pi / 2),
        ("0", 0.0),
        ("0.25", 0.25),
        (".5", 0.5),
        ("1e-3", 1e-3),
        ("3/4", 0.75),
        ("  pi/3 ", pi / 3),
    ],
)
def test_literals(text, value):
    assert parse_angle(text) == pytest.approx(value, rel=1e-15, abs=0)


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("p", 0),
        ("pi/", 3),
        ("pi/0", 3),
        ("5pi/1x", 5),
        ("*pi", 0),
        ("2*", 2),
        ("1.2.3", 0),
        ("pi pi", 2),
        (" -", 2),
    ],
)
def test_malformed(text, position):
    with pytest.raises(AngleParseError) as exc:
        parse_angle(text)
    assert exc.value.position == position
