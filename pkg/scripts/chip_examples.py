"""Print a few chip-firing runs next to their weights."""
from __future__ import annotations

from dataclasses import dataclass

from centralfiring import build
from centralfiring.central import normal_forms
from centralfiring.chips import (
    UnlabeledConfig,
    render,
    stabilize_unlabeled_typeA,
    weight_to_chips,
)


@dataclass
class ChipDemo:
    type: str
    weight: tuple[int, ...]


DEMOS = [ChipDemo("A3", (0, 0, 0)), ChipDemo("B2", (0, 1)), ChipDemo("C3", (1, 0, 0)),
         ChipDemo("D4", (0, 0, 0, 0))]


def main() -> None:
    for d in DEMOS:
        rs = build(d.type)
        print(f"{d.type} {d.weight}: {render(weight_to_chips(rs, d.weight))}")
        for nf in normal_forms(rs, d.weight):
            print(f"   -> {nf}: {render(weight_to_chips(rs, nf))}")
    for n in (4, 6, 9):
        c = UnlabeledConfig.of([0] * n)
        print(f"{n} chips at 0 stabilize to {stabilize_unlabeled_typeA(c)}")


if __name__ == "__main__":
    main()
