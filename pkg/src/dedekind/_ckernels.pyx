# cython: language_level=3
"""Compiled inner loop for the O(b) definitional Dedekind sum.

Same contract as ``dedekind._kernels_py.naive_numerator`` restricted to
b <= KERNEL_B_MAX, the largest b for which every intermediate (running
residue, term product, accumulator) provably fits in a signed 64-bit
integer, keeping the result exact.
"""

# |accumulator| <= (b-1)*b*b < 2**63 holds exactly up to b = 2**21 - 1
KERNEL_B_MAX = (1 << 21) - 1


def naive_numerator(long long a, long long b):
    """Sum of (2k - b)(2m - b) over k in [1, b), where m = a*k mod b."""
    cdef long long acc = 0
    cdef long long m = 0
    cdef long long k
    if not 0 < a < b or b > KERNEL_B_MAX:
        raise ValueError(f"kernel requires 0 < a < b <= {KERNEL_B_MAX}, got ({a}, {b})")
    for k in range(1, b):
        m += a
        if m >= b:
            m -= b
        acc += (2 * k - b) * (2 * m - b)
    return acc
