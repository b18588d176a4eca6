"""End-to-end files-and-CLI pipeline.

Writes a CNF to disk, generates a gadget instance with its label map,
solves it, verifies the certificate, and maps the certificate back to a
satisfying assignment — all through the command-line entry points.
Run as: python demos/certificate_pipeline.py
"""

import tempfile
from pathlib import Path

from connmatch.cli import main

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    cnf = tmp / "formula.cnf"
    cnf.write_text("p cnf 3 2\n1 -2 3 0\n-1 2 3 0\n")
    print(">>> formula:", cnf.read_text().strip().replace("\n", " | "))

    graph = tmp / "instance.gr"
    label_map = tmp / "instance.map"
    print("\n>>> connmatch generate bip4 ...")
    rc = main(["generate", "bip4", "--cnf", str(cnf), "--out", str(graph), "--map", str(label_map)])
    assert rc == 0
    k = int(graph.read_text().splitlines()[0].split()[2])  # just to show the file exists
    print("    wrote", graph.name, "and", label_map.name)

    cert = tmp / "solution.cert"
    print("\n>>> connmatch solve --solver brute --cert ...")
    rc = main(["solve", "--graph", str(graph), "--solver", "brute",
               "--brute-limit", "100", "--cert", str(cert)])
    assert rc == 0

    print("\n>>> connmatch verify (against the generator's k = 6)")
    rc = main(["verify", "--graph", str(graph), "--cert", str(cert), "--k", "6"])
    print("    exit status:", rc)

    back = tmp / "assignment.txt"
    print("\n>>> connmatch map-cert --direction project ...")
    rc = main([
        "map-cert", "bip4", "--cnf", str(cnf), "--map", str(label_map),
        "--direction", "project", "--cert", str(cert), "--out", str(back),
    ])
    assert rc == 0
    print("    recovered assignment file:", back.read_text().strip())

    print("\n>>> and back again: lift the assignment into a fresh certificate")
    lifted = tmp / "lifted.cert"
    rc = main([
        "map-cert", "bip4", "--cnf", str(cnf), "--map", str(label_map),
        "--direction", "lift", "--solution", str(back), "--out", str(lifted),
    ])
    assert rc == 0
    rc = main(["verify", "--graph", str(graph), "--cert", str(lifted), "--k", "6"])
    print("    lifted certificate verifies with exit status:", rc)
