"""Verifying L-arrays, de Bruijn tori, and de Bruijn sequences.

All three verifiers share the same contract: slide the relevant window over
the toroidal object, tally every filling, and report whether each possible
filling appeared exactly once.  The report lists what is missing and what is
duplicated, so a failed check is diagnosable, not just a boolean.
"""

from debruijn_arrays import (DigitGrid, verify_l_array, verify_sequence,
                             verify_torus)


def show(label: str, report) -> None:
    print(f"{label}: valid={report.valid} "
          f"(checked {report.positions_checked} windows)")
    if report.missing:
        shown = report.missing[:4]
        print(f"  missing {len(report.missing)}: {shown}"
              + (" ..." if len(report.missing) > 4 else ""))
    if report.duplicated:
        print(f"  duplicated: {report.duplicated[:4]}")


def main() -> None:
    # A valid 2-de Bruijn L-array: all 8 L fillings appear once.
    good = DigitGrid(2, [[0, 0, 1, 0],
                         [0, 1, 1, 1]])
    show("hand-built 2-L-array", verify_l_array(good))

    # The all-zeros grid fails spectacularly: (0,0,0) appears 8 times.
    zeros = DigitGrid(2, [[0, 0, 0, 0],
                          [0, 0, 0, 0]])
    show("all-zeros grid", verify_l_array(zeros))

    # A single flipped cell breaks several windows at once.
    dented = DigitGrid(2, [[0, 0, 1, 0],
                           [0, 1, 1, 0]])
    show("one cell flipped", verify_l_array(dented))

    # A (2,2)-de Bruijn torus: every 2x2 binary window appears exactly once
    # in a 4x4 toroidal array.
    torus = [[0, 0, 1, 0],
             [1, 1, 1, 0],
             [0, 1, 1, 1],
             [0, 1, 0, 0]]
    show("4x4 binary (2,2)-torus", verify_torus(torus, k=2, m=2, n=2))

    # Sequences are the one-dimensional case: every length-n word over the
    # alphabet appears exactly once as a cyclic factor.
    show('binary word "00010111", window 3', verify_sequence("00010111", 2, 3))
    show('binary word "00011011", window 3', verify_sequence("00011011", 2, 3))


if __name__ == "__main__":
    main()
