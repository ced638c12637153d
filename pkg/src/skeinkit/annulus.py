"""Symbolic annulus-skein vectors, branching rules, and expansion plans.

The unoriented side works in the eigenvector basis indexed by partitions:
multiplying by the core curve branches a basis vector into its one-cell
neighbors, and a meridian acts diagonally by the eigenvalues from
``eigen``.  Composing the two turns a decorated component into a weighted
family of plain cabled-and-encircled diagrams; ``ExpansionPlan`` records
that family and ``realize_diagrams`` builds the actual link diagrams.

The oriented side is kept formal: basis symbols are partition pairs,
products with the width-one generators expand by the one-cell branching
rules in either sense, and ``hsr_structure_check`` verifies the shape of
the square-of-the-core product without ever presenting the basis
elements themselves.
"""

from dataclasses import dataclass
from typing import Optional

from .diagram import LinkDiagram
from .eigen import isolating_polynomial, kauffman_meridian_eigenvalue
from .partition import Partition
from .ring import RingElem


# ----------------------------------------------------------------------
# vectors in the unoriented annulus skein


class AnnulusVecK:
    """Finite combination of unoriented annulus basis vectors.

    Coefficients are exact ring fractions keyed by partition; zero
    coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean: dict[Partition, RingElem] = {}
        for shape, coeff in (coeffs or {}).items():
            if not isinstance(shape, Partition):
                shape = Partition(tuple(shape))
            if not coeff.is_zero():
                clean[shape] = coeff
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AnnulusVecK is immutable")

    @classmethod
    def zero(cls) -> "AnnulusVecK":
        return cls({})

    @classmethod
    def basis(cls, shape: Partition) -> "AnnulusVecK":
        return cls({shape: RingElem.one()})

    def coefficient(self, shape: Partition) -> RingElem:
        return self.coeffs.get(shape, RingElem.zero())

    def support(self) -> list[Partition]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AnnulusVecK") -> "AnnulusVecK":
        total = dict(self.coeffs)
        for shape, coeff in other.coeffs.items():
            total[shape] = total.get(shape, RingElem.zero()) + coeff
        return AnnulusVecK(total)

    def __sub__(self, other: "AnnulusVecK") -> "AnnulusVecK":
        return self + other.scale(-RingElem.one())

    def scale(self, factor: RingElem) -> "AnnulusVecK":
        return AnnulusVecK({shape: coeff * factor for shape, coeff in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnnulusVecK):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "AnnulusVecK(0)"
        parts = [f"[{shape}]*({coeff})" for shape, coeff in sorted(self.coeffs.items())]
        return "AnnulusVecK(" + " + ".join(parts) + ")"


def branch_mul_y1(vec: AnnulusVecK) -> AnnulusVecK:
    """Multiply by the width-one basis vector: branch into one-cell neighbors.

    The coefficient of each output shape is the sum of the input
    coefficients over all shapes obtained from it by deleting or adding
    one cell.
    """
    total: dict[Partition, RingElem] = {}
    for shape, coeff in vec.coeffs.items():
        for neighbor in shape.cells_addable() + shape.cells_removable():
            total[neighbor] = total.get(neighbor, RingElem.zero()) + coeff
    return AnnulusVecK(total)


def meridian_act(vec: AnnulusVecK, r: int) -> AnnulusVecK:
    """Apply r encircling meridians: diagonal action by eigenvalue powers."""
    if r < 0:
        raise ValueError(f"meridian count must be nonnegative, got {r}")
    if r == 0:
        return vec
    return AnnulusVecK({
        shape: coeff * kauffman_meridian_eigenvalue(shape) ** r
        for shape, coeff in vec.coeffs.items()
    })


# ----------------------------------------------------------------------
# longitude-meridian descriptors


@dataclass(frozen=True)
class LMWord:
    """Nested longitude/meridian pattern, letters listed innermost first.

    Each letter is ("l", k) for k parallel longitude strands or ("m", k)
    for k meridians encircling everything inside it; the slot names the
    basis decoration carried by the innermost strand.
    """

    letters: tuple[tuple[str, int], ...]
    slot: Partition

    def __post_init__(self):
        for letter, exponent in self.letters:
            if letter not in ("l", "m"):
                raise ValueError(f"unknown letter {letter!r}")
            if exponent < 1:
                raise ValueError(f"letter exponent must be positive, got {exponent}")

    def __str__(self) -> str:
        inner = f"[{self.slot}]"
        if not self.letters:
            return inner
        return inner + " " + " ".join(f"{letter}^{exp}" for letter, exp in self.letters)


# ----------------------------------------------------------------------
# expansion plans


@dataclass(frozen=True)
class ExpansionPlan:
    """Recipe rewriting a decorated strand as diagrams with known weights.

    Each term inserts `meridians`-many encircling circles around a doubled
    strand whose inner copy carries the anchor decoration; `inner` resolves
    that decoration recursively until only bare strands remain.  Applying
    all terms symbolically yields `scale` times the target basis vector
    per stage (see realize_symbolic).
    """

    target: Partition
    anchor: Optional[Partition]
    terms: tuple[tuple[RingElem, int], ...]  # (coefficient, meridian count)
    scale: RingElem
    inner: Optional["ExpansionPlan"]

    @property
    def is_trivial(self) -> bool:
        return not self.terms

    def full_scale(self) -> RingElem:
        scale = self.scale
        if self.inner is not None:
            scale = scale * self.inner.full_scale()
        return scale

    def chains(self) -> list[tuple[RingElem, tuple[int, ...]]]:
        """All term combinations: (weight, meridian counts outermost first)."""
        if self.is_trivial:
            return [(RingElem.one(), ())]
        if self.inner is None:
            inner_chains = [(RingElem.one(), ())]
        else:
            inner_chains = self.inner.chains()
        out = []
        for coeff, r in self.terms:
            for inner_coeff, inner_counts in inner_chains:
                out.append((coeff * inner_coeff, (r,) + inner_counts))
        return out

    def lm_words(self) -> list[tuple[RingElem, LMWord]]:
        """The chains as longitude-meridian pattern descriptors."""
        out = []
        for coeff, counts in self.chains():
            letters: list[tuple[str, int]] = []
            for r in reversed(counts):
                letters.append(("l", 2))
                if r:
                    letters.append(("m", r))
            slot = self.target if self.is_trivial else Partition((1,))
            out.append((coeff, LMWord(tuple(letters), slot)))
        return out

    def to_dict(self) -> dict:
        return {
            "target": str(self.target),
            "anchor": str(self.anchor) if self.anchor is not None else None,
            "scale": self.scale.render(),
            "terms": [
                {"meridians": r, "coefficient": coeff.render()} for coeff, r in self.terms
            ],
            "inner": self.inner.to_dict() if self.inner is not None else None,
        }


def expand_ylambda(target: Partition, rho_choice: Optional[Partition] = None) -> ExpansionPlan:
    """Build the expansion plan for a decorated strand.

    The anchor defaults to removing a cell from the target's last row;
    any one-cell-smaller subpartition may be forced instead.  Width-one
    targets need no rewriting and yield the trivial plan.
    """
    if target.is_empty():
        raise ValueError("empty decoration is handled by deleting the component")
    if target.size() == 1:
        if rho_choice is not None:
            raise ValueError("width-one target takes no anchor choice")
        return ExpansionPlan(target, None, (), RingElem.one(), None)
    if rho_choice is None:
        anchor = target.last_row_shrunk()
    else:
        anchor = rho_choice
        if anchor not in target.cells_removable():
            raise ValueError(f"anchor {anchor} is not one cell below target {target}")
    iso = isolating_polynomial(target, anchor)
    terms = tuple((coeff, r) for r, coeff in enumerate(iso.coefficients))
    inner = expand_ylambda(anchor) if anchor.size() > 1 else None
    return ExpansionPlan(target, anchor, terms, iso.separation_value(), inner)


def realize_symbolic(plan: ExpansionPlan) -> AnnulusVecK:
    """Interpret a plan inside the symbolic annulus.

    Branch the resolved inner vector by one strand, apply each term's
    meridian powers, and sum with the term weights.  The isolating
    construction guarantees the result is exactly full_scale() times the
    target basis vector; callers may assert that identity.
    """
    if plan.is_trivial:
        return AnnulusVecK.basis(plan.target)
    if plan.inner is None:
        inner_vec = AnnulusVecK.basis(plan.anchor)
    else:
        inner_vec = realize_symbolic(plan.inner)
    branched = branch_mul_y1(inner_vec)
    total = AnnulusVecK.zero()
    for coeff, r in plan.terms:
        total = total + meridian_act(branched, r).scale(coeff)
    return total


def realize_diagrams(d: LinkDiagram, comp: int, plan: ExpansionPlan) -> list[tuple[RingElem, LinkDiagram]]:
    """Build the weighted honest diagrams a plan assigns to one component.

    Per chain, outermost level first: encircle the chosen component with
    that level's meridians, then double it; the next level operates on
    the inner copy.  The innermost strand stays bare.  The weighted sum
    of unoriented polynomial values over the output equals full_scale()
    times the decorated-link value the plan's target names.
    """
    out = []
    for coeff, counts in plan.chains():
        current = d
        for r in counts:
            if r:
                current = current.with_meridians(comp, r)
            current = current.cable(comp, 2)
        out.append((coeff, current))
    return out


# ----------------------------------------------------------------------
# oriented branching, kept formal


def homfly_branching_expand(alpha: Partition, beta: Partition, sense: str) -> dict[tuple[Partition, Partition], int]:
    """Multiply a basis pair by a width-one generator, in either sense.

    "with": the forward side gains a cell or the reverse side loses one.
    "against": the mirror rule (reverse side gains, forward side loses).
    """
    if sense not in ("with", "against"):
        raise ValueError(f"sense must be 'with' or 'against', got {sense!r}")
    total: dict[tuple[Partition, Partition], int] = {}
    if sense == "with":
        gained = [(mu, beta) for mu in alpha.cells_addable()]
        lost = [(alpha, nu) for nu in beta.cells_removable()]
    else:
        gained = [(alpha, nu) for nu in beta.cells_addable()]
        lost = [(mu, beta) for mu in alpha.cells_removable()]
    for pair in gained + lost:
        total[pair] = total.get(pair, 0) + 1
    return total


def _expand_linear(vec: dict[tuple[Partition, Partition], int], sense: str) -> dict[tuple[Partition, Partition], int]:
    total: dict[tuple[Partition, Partition], int] = {}
    for (alpha, beta), mult in vec.items():
        for pair, count in homfly_branching_expand(alpha, beta, sense).items():
            total[pair] = total.get(pair, 0) + mult * count
    return {pair: count for pair, count in total.items() if count}


@dataclass(frozen=True)
class PairingReport:
    """Decomposition of a diagonal-basis product into the expected shape."""

    shape: Partition
    holds: bool
    pair_coefficients: tuple[tuple[Partition, Partition, int], ...]
    problems: tuple[str, ...]


def hsr_structure_check(shape: Partition) -> PairingReport:
    """Check the shape of (diagonal basis element) times (width-one square).

    Expands the product through both branching senses, subtracts the
    original element, and verifies the result splits into the one-cell
    diagonal neighbors, twice-the-removable-count copies of the original,
    and symmetric off-diagonal pairs with equal nonnegative multiplicity.
    """
    start = {(shape, shape): 1}
    expanded = _expand_linear(_expand_linear(start, "with"), "against")
    expanded[(shape, shape)] = expanded.get((shape, shape), 0) - 1
    expanded = {pair: count for pair, count in expanded.items() if count}

    expected_diagonal: dict[tuple[Partition, Partition], int] = {}
    for neighbor in shape.cells_addable() + shape.cells_removable():
        key = (neighbor, neighbor)
        expected_diagonal[key] = expected_diagonal.get(key, 0) + 1
    removable = len(shape.cells_removable())
    if removable:
        key = (shape, shape)
        expected_diagonal[key] = expected_diagonal.get(key, 0) + 2 * removable

    problems: list[str] = []
    actual_diagonal = {pair: count for pair, count in expanded.items() if pair[0] == pair[1]}
    for pair in sorted(set(expected_diagonal) | set(actual_diagonal)):
        want = expected_diagonal.get(pair, 0)
        got = actual_diagonal.get(pair, 0)
        if want != got:
            problems.append(f"diagonal ({pair[0]};{pair[0]}) multiplicity {got}, expected {want}")

    pairs: dict[tuple[Partition, Partition], int] = {}
    for (alpha, beta), count in sorted(expanded.items()):
        if alpha == beta:
            continue
        if count < 0:
            problems.append(f"negative multiplicity {count} at ({alpha};{beta})")
            continue
        mirrored = expanded.get((beta, alpha), 0)
        if mirrored != count:
            problems.append(
                f"({alpha};{beta}) has multiplicity {count} but its mirror has {mirrored}"
            )
            continue
        canonical = (alpha, beta) if beta < alpha else (beta, alpha)
        pairs[canonical] = count
    coefficients = tuple((alpha, beta, count) for (alpha, beta), count in sorted(pairs.items()))
    return PairingReport(shape, not problems, coefficients, tuple(problems))
