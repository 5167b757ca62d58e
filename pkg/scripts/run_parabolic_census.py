#!/usr/bin/env python3
"""Print the 26-class parabolic census with parameters and residuals, and
cross-check every class against a realized matrix representation."""

from charvar import enumerate_parabolic, realize_character
from charvar.wirtinger import is_representation


def main():
    rep = enumerate_parabolic()
    print(f"{rep.total} classes at t = 2")
    for cid, n in rep.counts.items():
        print(f"  {cid:4s} {n}")
    print()
    for smp in rep.samples:
        q = realize_character(smp.vector)
        ok, res = is_representation(q)
        pars = ", ".join(f"{k}={v:.6g}" for k, v in smp.params.items()
                         if k != "t")
        print(f"{smp.id:4s} #{smp.branch}  relator={res:.2e}  "
              f"rep={'ok' if ok else 'FAIL'}  {pars}")


if __name__ == "__main__":
    main()
