"""Line-oriented certificate files.

Layout (fixed key order so files diff cleanly)::

    q2kit-certificate 1
    construction <tag>
    variant <tag>
    source <graph6 ...|hypergraph {...}>
    target <graph6 ...|edges n u-v ...>
    k <int>
    lambda1 <num/den>
    lambda2 <num/den>
    subsets <i,j,...> ...
    begin coloring / end coloring
    begin matrix / end matrix
    begin verdicts / end verdicts
"""

from __future__ import annotations

from fractions import Fraction

from .exact_linalg import RationalMatrix
from .graphs import Graph, from_graph6, to_graph6
from .witness import Verdicts, WitnessCertificate

MAGIC = "q2kit-certificate 1"


class CertificateFormatError(ValueError):
    pass


def _encode_graph(g: Graph) -> str:
    if g.n <= 62:
        return f"graph6 {to_graph6(g)}"
    return f"edges {g.n} " + " ".join(f"{u}-{v}" for u, v in g.sorted_edges())


def _decode_graph(s: str) -> Graph:
    kind, _, rest = s.partition(" ")
    if kind == "graph6":
        return from_graph6(rest)
    if kind == "edges":
        parts = rest.split()
        return Graph.from_edges(int(parts[0]), (tuple(map(int, p.split("-"))) for p in parts[1:]))
    raise CertificateFormatError(f"unknown graph encoding {kind!r}")


def dumps(cert: WitnessCertificate) -> str:
    lines = [
        MAGIC,
        f"construction {cert.construction}",
        f"variant {cert.variant}",
        f"source {cert.source}",
        f"target {_encode_graph(cert.target)}",
        f"k {cert.k}",
        f"lambda1 {cert.lam1}",
        f"lambda2 {cert.lam2}",
        "subsets " + " ".join(",".join(map(str, s)) for s in cert.subsets),
        "begin coloring",
        cert.coloring.rstrip("\n"),
        "end coloring",
        "begin matrix",
        cert.M.to_text().rstrip("\n"),
        "end matrix",
        "begin verdicts",
        *(f"{key} {str(val).lower()}" for key, val in cert.verdicts.as_dict().items()),
        f"valid {str(cert.valid).lower()}",
        "end verdicts",
    ]
    return "\n".join(ln for ln in lines if ln != "") + "\n"


def loads(text: str) -> WitnessCertificate:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise CertificateFormatError("missing certificate header")
    header: dict[str, str] = {}
    sections: dict[str, list[str]] = {}
    current = None
    for ln in lines[1:]:
        if current is not None:
            if ln.strip() == f"end {current}":
                current = None
            else:
                sections[current].append(ln)
            continue
        if not ln.strip():
            continue
        key, _, val = ln.partition(" ")
        if key == "begin":
            current = val.strip()
            sections[current] = []
        else:
            header[key] = val
    if current is not None:
        raise CertificateFormatError(f"unterminated section {current!r}")
    try:
        verdict_map = dict(ln.split() for ln in sections["verdicts"])
        verdicts = Verdicts(*(verdict_map[key] == "true" for key in ("pattern_ok", "annihilation_ok", "both_attained", "nowhere_zero_ok")))
        subsets = tuple(tuple(int(x) for x in tok.split(",")) for tok in header.get("subsets", "").split())
        return WitnessCertificate(
            target=_decode_graph(header["target"]),
            M=RationalMatrix.from_text("\n".join(sections["matrix"]), strict=False),
            lam1=Fraction(header["lambda1"]),
            lam2=Fraction(header["lambda2"]),
            construction=header["construction"],
            k=int(header["k"]),
            verdicts=verdicts,
            variant=header.get("variant", "standard"),
            source=header.get("source", ""),
            coloring="".join(ln + "\n" for ln in sections.get("coloring", [])),
            subsets=subsets,
        )
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc
