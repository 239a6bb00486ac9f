"""
Labelled transition systems (S, Lambda, ->) over finite sets.
"""
import collections

from thermocoalg_common.core.errors import UnknownStateError, ValidationError

Transition = collections.namedtuple("Transition", "src label dst")


class LTS(object):
    """
    @brief A finite, possibly nondeterministic, labelled transition system

    States and labels default to the ones used by the transitions. Passing
    them explicitly allows isolated states and unused labels.
    """

    def __init__(self, transitions, states=None, labels=None):
        transitions = [Transition(*t) for t in transitions]
        used_states = set()
        used_labels = set()
        for t in transitions:
            used_states.update((t.src, t.dst))
            used_labels.add(t.label)
        self._states = frozenset(used_states if states is None else states)
        self._labels = frozenset(used_labels if labels is None else labels)
        for t in transitions:
            if t.src not in self._states or t.dst not in self._states:
                raise ValidationError("transitions", "{} leaves the state set".format(tuple(t)))
            if t.label not in self._labels:
                raise ValidationError("transitions", "label {!r} is not declared".format(t.label))
        self._transitions = frozenset(transitions)
        self._out = collections.defaultdict(list)
        for t in sorted(self._transitions, key=repr):
            self._out[t.src].append(t)

    @property
    def states(self):
        return self._states

    @property
    def labels(self):
        return self._labels

    @property
    def transitions(self):
        return self._transitions

    def _check_state(self, p):
        if p not in self._states:
            raise UnknownStateError(p)

    def getTransitions(self, src=None, label=None, dst=None):
        """
        @brief Transitions matching the given fields, None matches anything
        """
        if src is not None:
            self._check_state(src)
            candidates = self._out.get(src, [])
        else:
            candidates = self._transitions
        return [t for t in candidates
                if (label is None or t.label == label) and (dst is None or t.dst == dst)]

    def successors(self, p, label=None):
        return frozenset(t.dst for t in self.getTransitions(p, label))

    def enabled(self, p):
        """labels leaving p"""
        return frozenset(t.label for t in self.getTransitions(p))

    def hasTransition(self, src, label, dst):
        return Transition(src, label, dst) in self._transitions

    def isDeterministic(self):
        """
        @brief At most one successor per state and label
        """
        seen = set()
        for t in self._transitions:
            if (t.src, t.label) in seen:
                return False
            seen.add((t.src, t.label))
        return True

    def __eq__(self, other):
        return isinstance(other, LTS) and (self._states, self._labels, self._transitions) == \
            (other._states, other._labels, other._transitions)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._states, self._labels, self._transitions))

    def printState(self, verbose=False):
        to_ret = "LTS: {} states, {} labels, {} transitions".format(
            len(self._states), len(self._labels), len(self._transitions))
        if verbose:
            for t in sorted(self._transitions, key=repr):
                to_ret += "\n  {} -{}-> {}".format(t.src, t.label, t.dst)
        return to_ret

    __repr__ = printState
