"""
Integer Partition - Young diagram arithmetic for growth diagram labels
"""


class IntegerPartition(tuple):
    """
    Weakly decreasing tuple of positive parts; trailing zeros are dropped.

    Rows are indexed from 0, so add_box(0) lengthens the first part.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def part(self, row):
        return self[row] if row < len(self) else 0

    def conjugate(self):
        """
        Transpose of the Young diagram.

        Returns:
            IntegerPartition: The conjugate partition
        """
        if not self:
            return IntegerPartition()
        return IntegerPartition(sum(1 for p in self if p > c) for c in range(self[0]))

    def can_add(self, row):
        return row <= len(self) and (row == 0 or self.part(row - 1) > self.part(row))

    def add_box(self, row):
        """Partition with one more box in the given row."""
        if not self.can_add(row):
            raise ValueError(f"Cannot add a box in row {row} of {self}")
        parts = list(self) + [0]
        parts[row] += 1
        return IntegerPartition(parts)

    def remove_box(self, row):
        """Partition with one box less in the given row."""
        if self.part(row) == 0 or self.part(row + 1) == self.part(row):
            raise ValueError(f"Cannot remove a box from row {row} of {self}")
        parts = list(self)
        parts[row] -= 1
        return IntegerPartition(parts)

    def contains(self, other):
        return len(other) <= len(self) and all(p <= self.part(i) for i, p in enumerate(other))

    def meet(self, other):
        return IntegerPartition(min(self.part(i), other.part(i)) for i in range(max(len(self), len(other))))

    def join(self, other):
        return IntegerPartition(max(self.part(i), other.part(i)) for i in range(max(len(self), len(other))))

    def cells(self):
        return [(r, c) for r, p in enumerate(self) for c in range(p)]

    def __str__(self):
        return ",".join(str(p) for p in self) if self else "0"

    def __repr__(self):
        return f"IntegerPartition({tuple(self)})"


EMPTY = IntegerPartition()


def parse_partition(text):
    """
    Parse "2,1" (or "21" for single-digit parts); "0", "" and "∅" mean empty.

    Args:
        text (str): Partition text

    Returns:
        IntegerPartition: The parsed partition
    """
    text = text.strip()
    if text in ("", "0", "∅"):
        return EMPTY
    if "," in text:
        return IntegerPartition(int(p) for p in text.split(","))
    return IntegerPartition(int(ch) for ch in text)


def added_box(small, big):
    """Row of the single box in big/small, or None if big is not small plus a box."""
    if big.size != small.size + 1 or not big.contains(small):
        return None
    for row in range(len(big)):
        if big.part(row) != small.part(row):
            return row
    return None


def is_box_step(a, b):
    """True if a and b are equal or differ by exactly one box."""
    return a == b or added_box(a, b) is not None or added_box(b, a) is not None


def is_horizontal_strip(small, big):
    """big/small has at most one box in every column."""
    if not big.contains(small):
        return False
    return all(small.part(row) >= big.part(row + 1) for row in range(len(big)))


def is_vertical_strip(small, big):
    """big/small has at most one box in every row."""
    if not big.contains(small):
        return False
    return all(big.part(row) - small.part(row) <= 1 for row in range(len(big)))


def horizontal_strip_steps(small, big):
    """
    Box-by-box chain from small to big, adding the strip's boxes left to right.

    Args:
        small (IntegerPartition): Inner shape
        big (IntegerPartition): Outer shape, big/small a horizontal strip

    Returns:
        list: Partitions small, ..., big
    """
    if not is_horizontal_strip(small, big):
        raise ValueError(f"{big}/{small} is not a horizontal strip")
    boxes = sorted((c, r) for r in range(len(big)) for c in range(small.part(r), big.part(r)))
    chain = [small]
    for _, row in boxes:
        chain.append(chain[-1].add_box(row))
    return chain


def vertical_strip_steps(small, big):
    """Box-by-box chain from small to big, adding the vertical strip top to bottom."""
    if not is_vertical_strip(small, big):
        raise ValueError(f"{big}/{small} is not a vertical strip")
    chain = [small]
    for row in range(len(big)):
        if big.part(row) > small.part(row):
            chain.append(chain[-1].add_box(row))
    return chain
