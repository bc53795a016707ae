"""Published reference values used as golden data by the tests."""

from __future__ import annotations

# columns 12345 12354 12435 12453 12534 12543; rows p12 p13 p14 p15 p23 p24 p25 p34 p35 p45
A5 = [
    [1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 1, 0, 0, 1, 0],
    [1, 0, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [1, 0, 1, 0, 1, 1],
    [0, 1, 1, 1, 1, 0],
    [1, 1, 0, 1, 0, 1],
]

A5_KERNEL = [1, -1, -1, 1, 1, -1]

CUBIC5 = "z[12345]*z[12453]*z[12534] - z[12354]*z[12435]*z[12543]"

T6_BASIS = [
    "z[123465]*z[124536] - z[123456]*z[124635]",
    "z[123546]*z[124365] - z[123456]*z[124635]",
    "z[123456]*z[125364] - z[123546]*z[125634]",
    "z[123456]*z[126453] - z[123546]*z[126543]",
    "z[123456]*z[125364] - z[123564]*z[125436]",
    "z[123564]*z[126345] - z[123465]*z[126354]",
    "z[123645]*z[124356] - z[123456]*z[124635]",
    "z[123465]*z[125463] - z[123645]*z[125643]",
    "z[123465]*z[126354] - z[123645]*z[126534]",
    "z[123564]*z[124563] - z[123654]*z[124653]",
    "z[123654]*z[125346] - z[123456]*z[125364]",
    "z[123465]*z[126354] - z[123654]*z[126435]",
    "z[124563]*z[125346] - z[124356]*z[125463]",
    "z[124563]*z[126435] - z[124365]*z[126453]",
    "z[126345]*z[126453]*z[126534] - z[126354]*z[126435]*z[126543]",
]

T6_QUARTIC = (
    "z[123654]*z[124536]*z[125463]*z[126345] - z[123645]*z[124563]*z[125436]*z[126354]"
)

# the open generators for n = 5: the cubic and two quadratic lifts
F5 = [
    "z[12354]*z[12435]*z[12543] - z[12345]*z[12453]*z[12534]",
    "z[12354]*z[12435] + z[12345]*z[12453] + z[12354]*z[12453]",
    "z[12354]*z[12453] + z[12453]*z[12534] + z[12354]*z[12543]",
]

# printed quadrics of the closed n = 5 ideal (the last repeats the third)
PT5_QUADRICS = [
    "z[12354]*z[12435] + z[12345]*z[12453] + z[12354]*z[12453]",
    "z[12345]*z[12534] + z[12345]*z[12543] + z[12354]*z[12543]",
    "z[12354]*z[12435] + z[12345]*z[12534] + z[12435]*z[12534]",
    "z[12345]*z[12453] + z[12345]*z[12543] + z[12435]*z[12543]",
    "z[12354]*z[12435] + z[12345]*z[12534] + z[12435]*z[12534]",
]

M_PT = [
    ["0", "-z[12543]", "-z[12345]", "-z[12354] - z[12534]", "z[12345]"],
    ["z[12543]", "0", "-z[12435] + z[12543]", "-z[12543]", "z[12435] + z[12453]"],
    ["z[12345]", "z[12435] - z[12543]", "0", "-z[12534]", "-z[12435]"],
    ["z[12354] + z[12534]", "z[12543]", "z[12534]", "0", "0"],
    ["-z[12345]", "-z[12435] - z[12453]", "z[12435]", "0", "0"],
]

LC5_QUADRICS = [
    "t11*t12 - t12*t13 - t11*t22 + t11*t23",
    "t12*t21 - t21*t22 - t12*t23 + t21*t23",
    "-t11*t22 + t13*t22 + t21*t22 - t21*t23",
    "-t13*t21 + t11*t23",
    "t13*t22 - t12*t23",
]

M_LC = [
    ["0", "0", "t22 - t23", "-t11 + t13", "-t21 + t23"],
    ["0", "0", "-t12 + t22 - t23", "t13", "t23"],
    ["-t22 + t23", "t12 - t22 + t23", "0", "-t22 + t23", "-t22"],
    ["t11 - t13", "-t13", "t22 - t23", "0", "t23"],
    ["t21 - t23", "-t23", "t22", "-t23", "0"],
]

L5_SUPPORTS = {
    (1, 1): ["12345", "12354", "12435", "12453", "12534", "12543"],
    (1, 2): ["12345", "12354", "12435"],
    (1, 3): ["12345", "12435", "12453"],
    (2, 1): ["12345", "12354", "12534"],
    (2, 2): ["12345", "12354"],
    (2, 3): ["12345"],
}

L6_T212 = ["123456", "123465", "123645", "123546", "123564", "123654", "125346", "125364"]

# (relation indices, lift) for n = 6
LIFTS6 = [
    ((1, 3, 4, 5), "z[126354]*z[126435] + z[126345]*z[126453] + z[126354]*z[126453]"),
    ((2, 3, 4, 5), "z[123546]*z[124536] + z[124536]*z[125346] + z[123546]*z[125436]"),
    ((1, 3, 4, 6), "z[125364]*z[125436] + z[125346]*z[125463] + z[125364]*z[125463]"),
    ((2, 3, 4, 6), "z[123645]*z[124635] + z[124635]*z[126345] + z[123645]*z[126435]"),
    ((1, 3, 5, 6), "z[124365]*z[124536] + z[124356]*z[124563] + z[124365]*z[124563]"),
    ((2, 3, 5, 6), "z[123654]*z[125634] + z[125634]*z[126354] + z[123654]*z[126534]"),
    ((1, 4, 5, 6), "z[123465]*z[123546] + z[123456]*z[123564] + z[123465]*z[123564]"),
    ((2, 4, 5, 6), "z[124653]*z[125643] + z[125643]*z[126453] + z[124653]*z[126543]"),
    ((3, 4, 5, 6), "z[124653]*z[125463] + z[124563]*z[125643] + z[124653]*z[125643]"),
]

TOR6_MINGENS = {2: 24, 3: 164, 4: 6}


def parse_plain(ring, text: str):
    """Parse a plain expression such as ``t11*t12 - t13`` over ``ring``."""
    env = {name: ring.var(name) for name in ring.names}
    return ring.zero() + eval(text, {"__builtins__": {}}, env)
