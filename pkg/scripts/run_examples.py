"""Print the worked examples: index, epsilon and reduction trace of each."""

from meander.compositions import seaweed
from meander.index import index_A, index_D
from meander.reduction import reduce_trace

EXAMPLES = [
    seaweed("D", 5, (5,), (5,), crossing=True),
    seaweed("D", 5, (2, 3), (1, 4), crossing=True),
    seaweed("D", 5, (1,) * 5, ()),
    seaweed("D", 5, (2, 2, 1), (3, 2)),
    seaweed("D", 6, (2, 4), (6,), crossing=True),
    seaweed("D", 4, (2, 2), (4,), crossing=True),
    seaweed("D", 4, (2, 2), (1,)),
    seaweed("D", 4, (1, 1), (4,)),
]


def main():
    print(f"gl_9 (2,4,3|5,4): index {index_A((2, 4, 3), (5, 4))}, "
          f"sl_9: {index_A((2, 4, 3), (5, 4), 'sl')}")
    for spec in EXAMPLES:
        r = index_D(spec)
        tr = reduce_trace(spec)
        print(f"{spec.notation():<18} index {r.index}  eps {r.epsilon:+d}  "
              f"cycles {r.summary.cycles}  segments {r.summary.segments}")
        print(f"    {tr}   [terminal {tr.terminal}, total {tr.total_index}]")


if __name__ == "__main__":
    main()
