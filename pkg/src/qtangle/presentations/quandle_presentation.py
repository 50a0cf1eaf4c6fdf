from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import final, override

from qtangle.exceptions import DuplicateGeneratorError, UndeclaredGeneratorError
from qtangle.quandles.quandle_term import GeneratorTerm, QuandleTerm


@final
@dataclass(frozen=True)
class Relation:
    lhs: QuandleTerm
    rhs: QuandleTerm

    @property
    def is_reflexive(self) -> bool:
        return self.lhs == self.rhs

    def generators(self) -> frozenset[str]:
        return self.lhs.generators() | self.rhs.generators()

    def substitute(self, replacements: Mapping[str, QuandleTerm]) -> "Relation":
        return Relation(
            self.lhs.substitute(replacements), self.rhs.substitute(replacements)
        )

    @override
    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@final
@dataclass(frozen=True)
class QuandlePresentation:
    """A finitely presented quandle `⟨generators | relations⟩`.

    Raises:
        DuplicateGeneratorError: A generator is declared twice.
        UndeclaredGeneratorError: A relation mentions an undeclared generator.

    """

    generators: tuple[str, ...] = ()
    relations: tuple[Relation, ...] = ()

    def __post_init__(self) -> None:
        declared: set[str] = set()

        for name in self.generators:
            if name in declared:
                raise DuplicateGeneratorError(name)

            declared.add(name)

        for relation in self.relations:
            for name in sorted(relation.generators() - declared):
                raise UndeclaredGeneratorError(name)

    @classmethod
    def free(cls, generators: Iterable[str]) -> "QuandlePresentation":
        return cls(tuple(generators))

    @classmethod
    def empty(cls) -> "QuandlePresentation":
        return cls()

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def relation_count(self) -> int:
        return len(self.relations)

    def with_relations(self, relations: Iterable[Relation]) -> "QuandlePresentation":
        return QuandlePresentation(self.generators, self.relations + tuple(relations))

    def union(self, other: "QuandlePresentation") -> "QuandlePresentation":
        """Return the free product; the generator sets must be disjoint."""
        return QuandlePresentation(
            self.generators + other.generators, self.relations + other.relations
        )

    def rename(self, renaming: Mapping[str, str]) -> "QuandlePresentation":
        if len(renaming) == 0:
            return self

        replacements = renaming_terms(renaming)
        return QuandlePresentation(
            tuple(renaming.get(name, name) for name in self.generators),
            tuple(relation.substitute(replacements) for relation in self.relations),
        )


def renaming_terms(renaming: Mapping[str, str]) -> dict[str, QuandleTerm]:
    return {old: GeneratorTerm(new) for old, new in renaming.items()}


def fresh_renaming(taken: Iterable[str], names: Iterable[str]) -> dict[str, str]:
    """Rename every name that collides with `taken` by appending `_k`, the smallest free `k >= 2`."""
    names = tuple(names)
    occupied = set(taken) | set(names)
    collisions = set(taken)
    renaming: dict[str, str] = {}

    for name in names:
        if name not in collisions:
            continue

        suffix = 2

        while f"{name}_{suffix}" in occupied:
            suffix += 1

        renaming[name] = f"{name}_{suffix}"
        occupied.add(renaming[name])

    return renaming
