#!/usr/bin/env python3
"""A gallery of game polynomials for a few instructive trees.

Shows both computation routes, the values that carry meaning (cell
count at 1, winner bit at -1, point count at 2), and the winner with
its optimal first move.
"""

import argparse
import sys

from treegamekit.game import optimal_move, winner
from treegamekit.poly import game_polynomial, game_polynomial_from_prunings
from treegamekit.tree import format_plane_tree, parse_plane_tree, vertex_count

GALLERY = [
    ("three-vertex star", "(() ())"),
    ("three-vertex path", "((()))"),
    ("worked example", "(() (() ()))"),
    ("equal pair, first", "(() (() ((()))))"),
    ("equal pair, second", "((()) ((() ())))"),
    ("non-unimodal", "((((() ()))) ((() () ())))"),
]


def describe(name: str, text: str) -> None:
    t = parse_plane_tree(text)
    phi = game_polynomial(t)
    check = game_polynomial_from_prunings(t)
    who = winner(t)
    move = optimal_move(t)
    print(f"{name}  {format_plane_tree(t)}")
    print(f"  vertices  {vertex_count(t)}")
    print(f"  phi       {phi}")
    print(f"  routes    {'agree' if phi == check else 'DISAGREE'}")
    print(f"  phi(1)    {phi(1)}")
    print(f"  phi(-1)   {phi(-1)}")
    print(f"  phi(2)    {phi(2)}")
    if move is None:
        print(f"  winner    {who.value}")
    else:
        sub = format_plane_tree(t[move - 1])
        print(f"  winner    {who.value}, best move {move} -> {sub}")
    print()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--tree",
        action="append",
        default=[],
        metavar="TEXT",
        help="extra tree to describe (repeatable)",
    )
    args = parser.parse_args()
    for name, text in GALLERY:
        describe(name, text)
    for k, text in enumerate(args.tree, 1):
        describe(f"user tree {k}", text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
