"""Golden-file cases for the command-line front end.

Run ``python tests/cli_golden.py`` to regenerate the expected outputs after
an intentional change in output format.
"""

import io
import pathlib
import sys

from protori.cli import main

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

ZHAT_2 = "prod[2^inf ; rest = inf]"
MIXED = "prod[2^inf, 3^2 ; rest = inf, 5^1]"
BASE = "prod[1 ; rest = inf, 2^inf * 3^inf]"
X = f"lattice(base={BASE}, free=[(0, 2, 1)], torsion=[(1, 5, 1)])"
Y = f"lattice(base={BASE}, free=[(0, 3, 2), (1, 2, -1)])"
SOL = "protorus(divisible=1, torus=0, solenoids=[2^inf, 3^inf ; rest = 1])"

CASES = {
    "normalize": ["normalize", MIXED],
    "normalize_trivial": ["normalize", "0"],
    "normalize_json": ["-o", "json", "normalize", MIXED],
    "invariants": ["invariants", MIXED],
    "quotient": ["quotient", "--k", "12", ZHAT_2],
    "quotient_json": ["--output", "json", "quotient", "--k", "12", ZHAT_2],
    "scale": ["scale", "--k", "18", "prod[2^3 * 3^1]"],
    "isogeny_true": ["isogeny", "prod[2^inf, 3^4]", "prod[2^inf * 5^2]"],
    "isogeny_false": ["isogeny", "prod[2^inf]", "prod[3^inf]"],
    "typeq": ["typeq", "2^inf * 3^4", "2^inf * 5^1"],
    "kernel": ["kernel", MIXED],
    "verify_exact": ["verify-exact", MIXED],
    "build_protorus": ["build-protorus", MIXED],
    "build_protorus_json": ["-o", "json", "build-protorus", "prod[1 ; rest = inf, 7^2]"],
    "decompose": ["decompose", "protorus(divisible=2, torus=1, solenoids=[2^inf])"],
    "dim": ["dim", "protorus(divisible=2, torus=1, solenoids=[2^inf])"],
    "dim_na": ["dim-na", "protorus(divisible=2, torus=1, solenoids=[2^inf])"],
    "tilde_delta": ["tilde-delta", SOL],
    "torsion": ["torsion", SOL],
    "resolve": ["resolve", SOL],
    "dual": ["dual", "cd(divisible=1, free=2, types=[5^inf])"],
    "undual": ["undual", SOL],
    "quasi_iso": ["quasi-iso", "cd(types=[2^inf])", "cd(types=[2^inf * 5^3])"],
    "acd_witness": ["acd-witness", SOL],
    "isogeny_protori": ["isogeny-protori", "protorus(solenoids=[2^inf])", "protorus(solenoids=[2^inf * 3^4])"],
    "lattice_meet": ["lattice", "meet", X, Y],
    "lattice_join": ["lattice", "join", X, Y],
    "lattice_leq": ["lattice", "leq", X, Y],
    "lattice_index": ["lattice", "index", f"lattice(base={BASE}, free=[(0, 2, 1), (1, 3, 2)])", f"lattice(base={BASE})"],
    "lattice_conductor": ["lattice", "conductor", X, Y],
    "lattice_scale": ["lattice", "scale", "--k", "6", X],
    "lattice_preimage_json": ["lattice", "preimage", "--k", "4", "-o", "json", X],
    "selftest": ["selftest", "--seed", "3", "--rounds", "20"],
    "error_non_prime": ["normalize", "prod[4^2]"],
    "error_bad_exponent": ["typeq", "2^-1", "1"],
    "error_bad_scalar": ["quotient", "--k", "0", ZHAT_2],
    "error_torus": ["tilde-delta", "protorus(torus=1)"],
    "error_not_contained": ["lattice", "index", X, f"lattice(base={BASE})"],
    "error_json": ["normalize", '{"rows": [}'],
}


def run_case(argv):
    """Exit status and captured streams, rendered as one text blob."""
    out, err = io.StringIO(), io.StringIO()
    status = main(argv, stdout=out, stderr=err, stdin=io.StringIO(""))
    return f"$ protori {' '.join(argv)}\n[exit {status}]\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"


def golden_path(name):
    return GOLDEN_DIR / f"{name}.txt"


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        golden_path(name).write_text(run_case(argv), encoding="utf-8")
    print(f"wrote {len(CASES)} golden files to {GOLDEN_DIR}", file=sys.stderr)
