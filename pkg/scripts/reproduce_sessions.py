"""Replay the worked sessions in scripts/sessions/ and print their output.

    python scripts/reproduce_sessions.py
"""

from pathlib import Path

from nstopo import RenderOptions, generate_base, parse_script, render_family, topology_from_subbase

SESSIONS = Path(__file__).parent / "sessions"
EXTENDED = RenderOptions(label=True, extended=True)


def show(title, family, opts=EXTENDED):
    print(f"-- {title}")
    print(render_family(family, opts))


def main():
    basics = parse_script((SESSIONS / "family_basics.nst").read_text())
    L = basics.family("L")
    show("family L", L)
    show("family L, tabular", L, RenderOptions(tabular=True, label=True))
    show("base generated by L", generate_base(L).named("B"))

    algebra = parse_script((SESSIONS / "family_algebra.nst").read_text())
    L1, L2 = algebra.family("L1"), algebra.family("L2")
    L3 = (L1 & L2).named("L3")
    L4 = (L1 + L2).named("L4")
    L5 = (~L4).named("L5")
    for f in (L3, L4, L5):
        show(f.name, f)
    print("L4 and L5 disjoint:", L4.is_disjoint(L5))

    sub = parse_script((SESSIONS / "subbasis.nst").read_text())
    T = topology_from_subbase(sub.family("S")).named("T")
    print(f"topology has cardinality {len(T)} and is:")
    print(render_family(T, RenderOptions(tabular=True, label=True, extended=True)))


if __name__ == "__main__":
    main()
