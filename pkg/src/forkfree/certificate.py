"""Coloring certificates: plain data plus a line-oriented text format.

Format (one record per line, ``key=value`` tokens, vertex lists comma
separated, ``-`` for an empty list)::

    certificate v1
    graph <graph6>
    class fork-gem
    omega 3
    bound 6
    peel vertex=5 kind=bisimplicial degree=3 omega=3 hole=0,1,2,3,4 leaf=6
    divide A=0,2,3 B=1,4 colors=2 omega=2
    exact-fallback vertices=0,1,2,3,4 omega=2 chi=3
    final 0,1,0,1,2,0,1
    end

``omega`` on a step line is the clique number of the graph the step acts
on; ``degree`` is the degree of the peeled vertex in that graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import Graph
from .graph6 import parse_graph6, to_graph6

CLASSES = ("fork-gem", "fork-butterfly", "perfectly-divisible")


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Peel:
    vertex: int
    kind: str  # "bisimplicial" or "trisimplicial"
    degree: int
    omega: int
    hole: tuple[int, ...]
    leaf: int


@dataclass(frozen=True)
class Divide:
    A: tuple[int, ...]
    B: tuple[int, ...]
    colors: int
    omega: int


@dataclass(frozen=True)
class ExactFallback:
    vertices: tuple[int, ...]
    omega: int
    chi: int


Step = Union[Peel, Divide, ExactFallback]


@dataclass
class ColoringCertificate:
    graph: Graph
    cls: str
    omega: int
    bound: int
    steps: list[Step] = field(default_factory=list)
    final: list[int] = field(default_factory=list)

    @property
    def colors_used(self) -> int:
        return len(set(self.final))

    @property
    def peels(self) -> list[Peel]:
        return [s for s in self.steps if isinstance(s, Peel)]

    @property
    def uses_fallback(self) -> bool:
        return any(isinstance(s, ExactFallback) for s in self.steps)

    def dumps(self) -> str:
        lines = [
            "certificate v1",
            f"graph {to_graph6(self.graph).decode('ascii')}",
            f"class {self.cls}",
            f"omega {self.omega}",
            f"bound {self.bound}",
        ]
        for step in self.steps:
            if isinstance(step, Peel):
                lines.append(
                    f"peel vertex={step.vertex} kind={step.kind} degree={step.degree} "
                    f"omega={step.omega} hole={_ints(step.hole)} leaf={step.leaf}"
                )
            elif isinstance(step, Divide):
                lines.append(f"divide A={_ints(step.A)} B={_ints(step.B)} colors={step.colors} omega={step.omega}")
            else:
                lines.append(f"exact-fallback vertices={_ints(step.vertices)} omega={step.omega} chi={step.chi}")
        lines.append(f"final {_ints(self.final)}")
        lines.append("end")
        return "\n".join(lines) + "\n"


def _ints(values) -> str:
    return ",".join(str(v) for v in values) if len(values) else "-"


def _parse_ints(text: str) -> tuple[int, ...]:
    if text == "-":
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise CertificateFormatError(f"bad vertex list {text!r}") from None


def _fields(tokens: list[str], expected: set[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in expected or key in out:
            raise CertificateFormatError(f"unexpected token {tok!r}")
        out[key] = value
    if set(out) != expected:
        raise CertificateFormatError(f"missing fields {sorted(expected - set(out))}")
    return out


def loads(text: str) -> ColoringCertificate:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "certificate v1":
        raise CertificateFormatError("missing 'certificate v1' header")
    if lines[-1] != "end":
        raise CertificateFormatError("missing 'end' line")
    header: dict[str, str] = {}
    steps: list[Step] = []
    final: list[int] | None = None
    try:
        for ln in lines[1:-1]:
            kind, _, rest = ln.partition(" ")
            tokens = rest.split()
            if kind in ("graph", "class", "omega", "bound"):
                header[kind] = rest
            elif kind == "peel":
                f = _fields(tokens, {"vertex", "kind", "degree", "omega", "hole", "leaf"})
                steps.append(
                    Peel(int(f["vertex"]), f["kind"], int(f["degree"]), int(f["omega"]), _parse_ints(f["hole"]), int(f["leaf"]))
                )
            elif kind == "divide":
                f = _fields(tokens, {"A", "B", "colors", "omega"})
                steps.append(Divide(_parse_ints(f["A"]), _parse_ints(f["B"]), int(f["colors"]), int(f["omega"])))
            elif kind == "exact-fallback":
                f = _fields(tokens, {"vertices", "omega", "chi"})
                steps.append(ExactFallback(_parse_ints(f["vertices"]), int(f["omega"]), int(f["chi"])))
            elif kind == "final":
                final = list(_parse_ints(rest))
            else:
                raise CertificateFormatError(f"unknown record {kind!r}")
        graph = parse_graph6(header["graph"])
        cert = ColoringCertificate(graph, header["class"], int(header["omega"]), int(header["bound"]), steps, final or [])
    except KeyError as exc:
        raise CertificateFormatError(f"missing header line {exc}") from None
    except ValueError as exc:
        if isinstance(exc, CertificateFormatError):
            raise
        raise CertificateFormatError(str(exc)) from None
    if final is None:
        raise CertificateFormatError("missing 'final' line")
    if cert.cls not in CLASSES:
        raise CertificateFormatError(f"unknown class {cert.cls!r}")
    if len(final) != graph.n:
        raise CertificateFormatError(f"final colouring has {len(final)} entries for {graph.n} vertices")
    return cert
