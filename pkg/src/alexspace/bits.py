"""Small helpers for point sets stored as int bitmasks."""


def mask(points):
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(m):
    """Ascending list of the points in bitmask ``m``."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def popcount(m):
    return bin(m).count("1")


def full(n):
    return (1 << n) - 1


def subset(a, b):
    return a & ~b == 0


def lowest(m):
    return (m & -m).bit_length() - 1
