"""Write the sample inputs used in the README and CLI tests into samples/."""

import json
import pathlib

from iconic.algebras import small_fixtures
from iconic.base import terminal
from iconic.counterexample import embed_doubly_degenerate, omega_example
from iconic.pseudo import cocycle_bicategory, iconic_from_strict
from iconic.wgraph import graph_from_edges, two_graph

OUT = pathlib.Path(__file__).resolve().parent.parent / "samples"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    docs = {
        "terminal.json": terminal().to_json(),
        "loop.json": graph_from_edges(("x",), {("x", "x"): 1}).to_json(),
        "twograph.json": two_graph(("x", "y"), {"f": ("x", "y"), "g": ("x", "y")},
                                   {("f", "g"): 1, ("f", "f"): 1}).to_json(),
        "cocycle.json": cocycle_bicategory().to_json(),
        "perturbed_cocycle.json": cocycle_bicategory({(1, 1, 0): 1}).to_json(),
        "strict3_z2.json": small_fixtures()[2].to_json(),
        "tricat_z2.json": iconic_from_strict(small_fixtures()[2]).to_json(),
        "tricat_omega.json": embed_doubly_degenerate(omega_example()).to_json(),
    }
    for name, doc in docs.items():
        (OUT / name).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
