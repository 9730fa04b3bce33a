from spanseg import catalog
from spanseg.catobj import algebraic_to_simplicial
from spanseg.mutation import (
    composition_mutants,
    face_mutants,
    simplicial_mutant_detected,
    table_mutant_detected,
)

SOURCES = [catalog.walking_arrow(), catalog.walking_isomorphism(),
           catalog.walking_idempotent(), catalog.chain(2)]


def test_unmutated_inputs_pass():
    for c in SOURCES:
        assert not simplicial_mutant_detected(algebraic_to_simplicial(c, 3))
        assert not table_mutant_detected(c.underlying)


def test_every_face_mutant_is_detected():
    total = 0
    for c in SOURCES:
        for name, mutant in face_mutants(algebraic_to_simplicial(c, 3)):
            total += 1
            assert simplicial_mutant_detected(mutant), name
    assert total >= 100


def test_every_composition_mutant_is_detected():
    total = 0
    for c in SOURCES:
        for name, mutant in composition_mutants(c):
            total += 1
            assert table_mutant_detected(mutant), name
    assert total > 0


def test_mutants_change_exactly_one_entry():
    x = algebraic_to_simplicial(catalog.walking_arrow(), 2)
    for _, mutant in face_mutants(x):
        changed = sum(a != b for row, mrow in zip(x.faces, mutant.faces)
                      for d, m in zip(row, mrow) for a, b in zip(d.images, m.images))
        assert changed == 1
