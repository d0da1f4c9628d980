"""Regenerate src/orbitlab/data/moduli.json (Conway polynomials, p in {2,3,5,7}, k <= 8).

Conway order: x^n - a1 x^(n-1) + a2 x^(n-2) - ... compared lexicographically on
(a1, ..., an); the first primitive polynomial whose roots are compatible with
all tabulated subfield polynomials wins.
"""
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from orbitlab.fields import poly_mod, poly_mulmod, poly_powmod, prime_factors  # noqa: E402

PRIMES = (2, 3, 5, 7)
MAX_K = 8
OUT = Path(__file__).resolve().parents[1] / "src" / "orbitlab" / "data" / "moduli.json"


def conway_candidates(p, n):
    for code in range(p ** n):
        a = []
        for _ in range(n):
            a.append(code % p)
            code //= p
        a.reverse()  # a[0] = a1 is the most significant digit
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for i, ai in enumerate(a, start=1):
            coeffs[n - i] = ((-1) ** i * ai) % p
        yield coeffs


def is_primitive(f, p, n):
    if f[0] == 0:
        return False
    order = p ** n - 1
    x = [0, 1]
    if poly_powmod(x, order, f, p) != [1]:
        return False
    return all(poly_powmod(x, order // r, f, p) != [1] for r in prime_factors(order))


def evaluate_at(g, elem, f, p):
    acc = []
    for c in reversed(g):
        acc = poly_mulmod(acc, elem, f, p) if acc else []
        acc = poly_mod((acc or [0]) if c == 0 else _add_const(acc, c, p), f, p)
    return acc


def _add_const(a, c, p):
    a = list(a) or [0]
    a[0] = (a[0] + c) % p
    return a


def conway(p, n, table):
    for f in conway_candidates(p, n):
        if not is_primitive(f, p, n):
            continue
        ok = True
        for d in range(1, n):
            if n % d:
                continue
            root = poly_powmod([0, 1], (p ** n - 1) // (p ** d - 1), f, p)
            if evaluate_at(table[(p, d)], root, f, p):
                ok = False
                break
        if ok:
            return f
    raise RuntimeError(f"no Conway polynomial found for p={p}, n={n}")


def main():
    table = {}
    entries = []
    for p in PRIMES:
        for n in range(1, MAX_K + 1):
            f = conway(p, n, table)
            table[(p, n)] = f
            entries.append({"p": p, "k": n, "modulus": f})
            print(p, n, f, flush=True)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "description": "Conway polynomials, coefficients lowest degree first",
        "moduli": entries,
    }
    OUT.write_text(json.dumps(payload, indent=1) + "\n")


if __name__ == "__main__":
    main()
