"""Small helpers for int-as-bitset bookkeeping."""


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Position of the least set bit; ``mask`` must be nonzero."""
    return (mask & -mask).bit_length() - 1
