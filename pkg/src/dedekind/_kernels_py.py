"""Pure-Python fallback for the compiled summation kernel.

Same contract as ``dedekind._ckernels.naive_numerator`` but with Python
integers, so it is exact for any b (and roughly two orders of magnitude
slower).
"""


def naive_numerator(a: int, b: int) -> int:
    """Sum of (2k - b)(2m - b) over k in [1, b), where m = a*k mod b.

    Requires 0 < a < b and gcd(a, b) = 1; the definitional Dedekind sum
    s(a, b) is this value divided by 4*b**2.
    """
    if not 0 < a < b:
        raise ValueError(f"kernel requires 0 < a < b, got ({a}, {b})")
    acc = 0
    m = 0
    for k in range(1, b):
        m += a
        if m >= b:
            m -= b
        acc += (2 * k - b) * (2 * m - b)
    return acc
