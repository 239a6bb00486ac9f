"""
Observational equivalence and bisimulation by partition refinement.

Colored machines are decided twice, by comparing prefixes of length
|M| + |M'| and by Moore refinement of the disjoint union; the two verdicts
must agree. Nondeterministic LTS use signature splitting in the
Kanellakis-Smolka manner.
"""
import collections

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import UnknownStateError
from thermocoalg_common.core.report import CheckReport
from thermocoalg_coalgebra.core.machine import behaviour, disjoint_union


class Verdict(collections.namedtuple("Verdict", "equivalent index")):
    """index is the first position where the streams differ, None when equivalent"""
    __slots__ = ()

    def __bool__(self):
        return self.equivalent

    __nonzero__ = __bool__


def _blocks(block_of):
    groups = collections.OrderedDict()
    for state, b in block_of.items():
        groups.setdefault(b, []).append(state)
    return [frozenset(g) for g in groups.values()]


def _refine(states, signature):
    """
    @brief Split {states} by signature(state, block_of) until stable

    Returns the final state -> block index map.
    """
    block_of = {s: 0 for s in states}
    count = 1
    while True:
        keys = {}
        refined = {}
        for s in states:
            key = signature(s, block_of)
            refined[s] = keys.setdefault(key, len(keys))
        if len(keys) == count:
            return refined
        block_of, count = refined, len(keys)


def moore_partition(m):
    """
    @brief Blocks of observationally equivalent states of one machine
    """
    def signature(x, block_of):
        color, y = m.step(x)
        return block_of[x], color, block_of[y]
    return _blocks(_refine(m.states, signature))


def prefix_verdict(m, x, m_prime, x_prime):
    """
    @brief Compare beh(x) and beh'(x') on |M| + |M'| colors
    """
    n = len(m) + len(m_prime)
    index = behaviour(m, x, n).firstDifference(behaviour(m_prime, x_prime, n))
    return Verdict(index is None, index)


def refinement_verdict(m, x, m_prime, x_prime):
    """
    @brief Same block of the Moore partition of m + m'
    """
    m.step(x)
    m_prime.step(x_prime)
    union = disjoint_union(m, m_prime)
    for block in moore_partition(union):
        if (0, x) in block:
            return (1, x_prime) in block
    return False


def observational_equivalence(m, x, m_prime, x_prime):
    """
    @brief beh(x) = beh'(x'), with the first distinguishing index when they differ

    Raises CheckFailed if prefix comparison and refinement disagree.
    """
    verdict = prefix_verdict(m, x, m_prime, x_prime)
    refined = refinement_verdict(m, x, m_prime, x_prime)
    report = CheckReport("observational equivalence")
    report.add("prefix and refinement agree", 0 if refined == verdict.equivalent else 1, 0)
    report.raiseOnFailure()
    log.debug("[observational_equivalence]", "{!r} vs {!r}: {}".format(x, x_prime, verdict))
    return verdict


def bisimulation_classes(lts):
    """
    @brief Coarsest bisimulation of a finite LTS as a list of blocks
    """
    def signature(p, block_of):
        moves = frozenset((t.label, block_of[t.dst]) for t in lts.getTransitions(p))
        return block_of[p], moves
    return _blocks(_refine(sorted(lts.states, key=repr), signature))


def bisimilar(lts, p, q):
    for s in (p, q):
        if s not in lts.states:
            raise UnknownStateError(s)
    return any(p in block and q in block for block in bisimulation_classes(lts))
