"""Built-in group constructors, the default corpus, and catalog files.

Catalog files are line-delimited JSON records with explicit 0-indexed
image arrays; cycle notation is accepted only as CLI input, never on
the wire.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .group import PermGroup
from .perm import Perm


# built-in constructors ------------------------------------------------------


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return PermGroup(1, [], name="S1")
    gens = [Perm.transposition(n, 0, 1), Perm.from_cycles(n, [range(n)])]
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("need n >= 3")
    three = Perm.from_cycles(n, [(0, 1, 2)])
    if n % 2 == 1:
        big = Perm.from_cycles(n, [range(n)])
    else:
        big = Perm.from_cycles(n, [range(1, n)])
    return PermGroup(n, [three, big], name=f"A{n}")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return PermGroup(1, [], name="C1")
    return PermGroup(n, [Perm.from_cycles(n, [range(n)])], name=f"C{n}")


def dihedral(order: int) -> PermGroup:
    """The dihedral group of the given (even, >= 4) order, on order/2 points."""
    if order < 4 or order % 2:
        raise ValueError("dihedral order must be an even number >= 4")
    n = order // 2
    rot = Perm.from_cycles(n, [range(n)])
    flip = Perm([(n - i) % n for i in range(n)])
    return PermGroup(n, [rot, flip], name=f"D{order}")


def generalized_quaternion(order: int) -> PermGroup:
    """Q_{2^n} in its regular representation; the unique-involution
    property is verified on construction."""
    if order < 8 or order & (order - 1):
        raise ValueError("generalized quaternion order must be 2^n >= 8")
    half = order // 2
    # Points are a^i b^j with 0 <= i < half, j in {0, 1}; right
    # multiplication by a and b gives the regular action, using
    # b^2 = a^{half/2} and a^i b = b a^{-i}.
    def idx(i: int, j: int) -> int:
        return j * half + i

    a_imgs = [0] * order
    b_imgs = [0] * order
    for j in range(2):
        for i in range(half):
            a_imgs[idx(i, j)] = idx((i + (1 if j == 0 else -1)) % half, j)
    for i in range(half):
        b_imgs[idx(i, 0)] = idx(i, 1)
        b_imgs[idx(i, 1)] = idx((i + half // 2) % half, 0)
    g = PermGroup(order, [Perm(a_imgs), Perm(b_imgs)], name=f"Q{order}")
    assert g.order() == order
    involutions = [x for x in g.elements() if x.order() == 2]
    assert len(involutions) == 1, "generalized quaternion must have a unique involution"
    return g


def elementary_abelian(p: int, k: int) -> PermGroup:
    gens = []
    degree = p * k
    for i in range(k):
        gens.append(Perm.from_cycles(degree, [range(i * p, (i + 1) * p)]))
    return PermGroup(degree, gens, name=f"E{p}^{k}")


def direct_product(a: PermGroup, b: PermGroup, name: str | None = None) -> PermGroup:
    degree = a.degree + b.degree
    gens = [Perm(list(g.images) + list(range(a.degree, degree))) for g in a.gens]
    gens += [Perm(list(range(a.degree)) + [x + a.degree for x in g.images]) for g in b.gens]
    label = name or f"{a.name}x{b.name}"
    return PermGroup(degree, gens, name=label)


def wreath_cyclic(p: int) -> PermGroup:
    """Z_p wr Z_p in its imprimitive action on p^2 points; order p^(p+1)."""
    degree = p * p
    base = Perm.from_cycles(degree, [range(p)])
    top = Perm([(i + p) % degree for i in range(degree)])
    g = PermGroup(degree, [base, top], name=f"Z{p}wrZ{p}")
    assert g.order() == p ** (p + 1)
    return g


def psl2(q: int) -> PermGroup:
    """PSL(2, q) for an odd prime q, acting on the q+1 projective points.

    Points 0..q-1 are the affine line, point q is infinity; generators
    are the Mobius maps z -> z+1 and z -> z/(z+1).
    """
    if q < 3 or any(q % d == 0 for d in range(2, q)):
        raise ValueError("q must be an odd prime")
    inf = q

    def mobius(a: int, b: int, c: int, d: int) -> Perm:
        imgs = []
        for z in range(q + 1):
            if z == inf:
                imgs.append((a * pow(c, -1, q)) % q if c % q else inf)
                continue
            num, den = (a * z + b) % q, (c * z + d) % q
            imgs.append((num * pow(den, -1, q)) % q if den else inf)
        return Perm(imgs)

    g = PermGroup(q + 1, [mobius(1, 1, 0, 1), mobius(1, 0, 1, 1)], name=f"PSL(2,{q})")
    assert g.order() == q * (q * q - 1) // 2
    return g


def sl23() -> PermGroup:
    """SL(2, 3) acting on the 8 nonzero vectors of F_3^2."""
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def action(a: int, b: int, c: int, d: int) -> Perm:
        return Perm(
            index[((a * x + c * y) % 3, (b * x + d * y) % 3)] for x, y in vectors
        )

    g = PermGroup(8, [action(1, 1, 0, 1), action(1, 0, 1, 1)], name="SL(2,3)")
    assert g.order() == 24
    return g


_BUILTINS = {
    "symmetric": (symmetric, "symmetric n: S_n on n points"),
    "alternating": (alternating, "alternating n: A_n on n points"),
    "cyclic": (cyclic, "cyclic n: Z_n"),
    "dihedral": (dihedral, "dihedral m: dihedral group of order m (m even)"),
    "generalized_quaternion": (
        generalized_quaternion,
        "generalized_quaternion m: Q_m of order m = 2^n, regular representation",
    ),
    "elementary_abelian": (elementary_abelian, "elementary_abelian p k: (Z_p)^k"),
    "wreath_cyclic": (wreath_cyclic, "wreath_cyclic p: Z_p wr Z_p on p^2 points"),
    "psl2": (psl2, "psl2 q: PSL(2,q) on q+1 points, q an odd prime"),
    "sl23": (lambda: sl23(), "sl23: SL(2,3) on the 8 nonzero vectors of F_3^2"),
}


def builtin_names() -> list[tuple[str, str]]:
    return [(name, desc) for name, (_, desc) in sorted(_BUILTINS.items())]


def builtin_group(name: str, *params: int) -> PermGroup:
    if name not in _BUILTINS:
        raise ValueError(f"unknown builtin: {name}")
    ctor = _BUILTINS[name][0]
    return ctor(*params)


# catalog entries and files --------------------------------------------------


@dataclass
class CatalogEntry:
    label: str
    degree: int
    generators: list[list[int]]
    tags: list[str] = field(default_factory=list)
    annotations: dict = field(default_factory=dict)
    expected_order: int | None = None

    def build(self) -> PermGroup:
        gens = [Perm(images) for images in self.generators]
        for g in gens:
            if g.degree != self.degree:
                raise ValueError(f"{self.label}: generator degree mismatch")
        group = PermGroup(self.degree, gens, name=self.label)
        if self.expected_order is not None and group.order() != self.expected_order:
            raise ValueError(
                f"{self.label}: order {group.order()} != expected {self.expected_order}"
            )
        return group

    def to_json(self) -> str:
        record = {"label": self.label, "degree": self.degree, "generators": self.generators}
        if self.tags:
            record["tags"] = self.tags
        if self.annotations:
            record["annotations"] = self.annotations
        if self.expected_order is not None:
            record["expected_order"] = self.expected_order
        return json.dumps(record, sort_keys=True)


def entry_for(group: PermGroup, tags: list[str] | None = None) -> CatalogEntry:
    return CatalogEntry(
        label=group.name or "unnamed",
        degree=group.degree,
        generators=[list(g.images) for g in group.gens],
        tags=tags or [],
        expected_order=group.order(),
    )


def load_catalog(path: str) -> list[CatalogEntry]:
    entries = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                record = json.loads(line)
                entry = CatalogEntry(
                    label=record["label"],
                    degree=record["degree"],
                    generators=record["generators"],
                    tags=record.get("tags", []),
                    annotations=record.get("annotations", {}),
                    expected_order=record.get("expected_order"),
                )
                entry.build()
            except (KeyError, ValueError, json.JSONDecodeError) as exc:
                raise ValueError(f"{path}:{lineno}: bad catalog entry: {exc}") from exc
            entries.append(entry)
    return entries


def save_catalog(entries: list[CatalogEntry], path: str) -> None:
    with open(path, "w") as fh:
        for entry in entries:
            fh.write(entry.to_json() + "\n")


def default_corpus() -> list[CatalogEntry]:
    """The shipped corpus: 40+ groups of order up to 2448."""
    groups: list[PermGroup] = []
    groups += [symmetric(n) for n in range(2, 7)]
    groups += [alternating(n) for n in range(3, 7)]
    groups += [cyclic(n) for n in (2, 3, 4, 5, 6, 8, 9, 12)]
    groups += [dihedral(m) for m in (6, 8, 10, 12, 16)]
    groups += [generalized_quaternion(m) for m in (8, 16, 32)]
    groups += [
        elementary_abelian(2, 2),
        elementary_abelian(2, 3),
        elementary_abelian(3, 2),
        elementary_abelian(5, 2),
    ]
    groups += [wreath_cyclic(2), wreath_cyclic(3)]
    groups += [psl2(5), psl2(7), psl2(17)]
    groups += [sl23()]
    groups += [
        direct_product(cyclic(2), cyclic(4)),
        direct_product(cyclic(2), dihedral(8)),
        direct_product(cyclic(2), generalized_quaternion(8)),
        direct_product(symmetric(3), symmetric(3)),
        direct_product(alternating(4), cyclic(2)),
        direct_product(dihedral(6), cyclic(3)),
        direct_product(cyclic(3), cyclic(9)),
    ]
    entries = [entry_for(g, tags=["builtin"]) for g in groups]
    labels = [e.label for e in entries]
    assert len(labels) == len(set(labels)), "corpus labels must be unique"
    assert len(entries) >= 40
    return entries
