"""Print k(g_i) and the G_{k(g_i)} membership among the known Giuga numbers."""

from giuga import default_cache
from giuga.cli import giuga_table


def main():
    rows = giuga_table(default_cache())
    for r in rows:
        members = ", ".join(f"g_{j}" for j in r["members"])
        print(f"g_{r['i']:<2}  members: {members:<22}  k = {r['k']}")


if __name__ == "__main__":
    main()
