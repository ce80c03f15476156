"""Compare the diagonal-1 and diagonal-(l-1) hypergraph witnesses on the octahedron.

With triangles (l = 3) a vertex missing color i needs diagonal 2 in A_i so that
A_i has spectrum {-1, 2}.  Putting 1 there adds eigenvalue 1 to M.
"""

from q2kit.graphs import octahedron_triangle_hypergraph
from q2kit.oracle import eigensolve_symmetric
from q2kit.witness import witness_hypergraph


def describe(label, cert):
    clusters = eigensolve_symmetric(cert.M.to_float()).clusters()
    print(f"{label}: n={cert.M.rows} lambda=({cert.lam1}, {cert.lam2})")
    for key, val in cert.verdicts.as_dict().items():
        print(f"  {key:16s} {val}")
    print("  clusters        " + ", ".join(f"{c:+.9f} x{m}" for c, m in clusters))


def main():
    h = octahedron_triangle_hypergraph()
    describe("diagonal 1", witness_hypergraph(h, case="a", literal=True))
    describe("diagonal l-1", witness_hypergraph(h, case="a"))


if __name__ == "__main__":
    main()
