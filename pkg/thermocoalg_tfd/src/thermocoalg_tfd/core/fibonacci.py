"""
The sigma+/sigma- single-step tree.

A |0> node steps only to |1> (sigma+); a |1> node steps to |0> (sigma-) and
persists in |1> (sigma+ sigma-). The number of states per depth follows the
Fibonacci progression.
"""
import collections
import math
from enum import Enum

import numpy as np

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import ValidationError
from thermocoalg_tfd.core.qubit import SIGMA_1, SIGMA_2

Level = Enum('Level', 'Zero One')
Rule = Enum('Rule', 'Root SigmaPlus SigmaMinus SigmaPlusSigmaMinus')

TREE_DEPTH_CAP = 40
GOLDEN_RATIO = 0.5 * (1.0 + math.sqrt(5.0))

SIGMA_PLUS = SIGMA_1 + 1j * SIGMA_2
SIGMA_MINUS = SIGMA_1 - 1j * SIGMA_2

# |1> is the upper component
BASIS = {Level.One: np.array([1, 0], dtype=complex), Level.Zero: np.array([0, 1], dtype=complex)}

RULE_MATRIX = {Rule.SigmaPlus: SIGMA_PLUS,
               Rule.SigmaMinus: SIGMA_MINUS,
               Rule.SigmaPlusSigmaMinus: SIGMA_PLUS @ SIGMA_MINUS}


class GenerationCensus(collections.namedtuple("GenerationCensus", "depth zeros ones")):
    __slots__ = ()

    @property
    def total(self):
        return self.zeros + self.ones


class Node(object):
    __slots__ = ['state', 'depth', 'parent', 'rule']

    def __init__(self, state, depth=0, parent=None, rule=Rule.Root):
        self.state = state
        self.depth = depth
        self.parent = parent
        self.rule = rule

    def printState(self):
        return "{}@{} via {}".format(self.state.name, self.depth, self.rule.name)


def root():
    return Node(Level.Zero)


def step(node):
    """
    @brief Children of a node, |0> -> [|1>], |1> -> [|0>, |1>]
    """
    d = node.depth + 1
    if node.state == Level.Zero:
        return [Node(Level.One, d, node, Rule.SigmaPlus)]
    return [Node(Level.Zero, d, node, Rule.SigmaMinus), Node(Level.One, d, node, Rule.SigmaPlusSigmaMinus)]


def apply_rule(rule, state):
    """
    @brief The rule's 2x2 matrix applied to the basis vector of state
    """
    return RULE_MATRIX[rule] @ BASIS[state]


def rule_scalar(rule, state):
    """
    @brief c with apply_rule(rule, state) = c |child>, None if the image is zero or off the basis
    """
    image = apply_rule(rule, state)
    for vector in BASIS.values():
        c = np.vdot(vector, image)
        if c != 0 and np.allclose(image, c * vector, rtol=0, atol=1e-15):
            return complex(c)
    return None


def verify_matrix_semantics(node):
    """
    @brief True if the rule maps the parent's basis vector onto a multiple of the node's
    """
    if node.rule == Rule.Root or node.parent is None:
        raise ValidationError("node", "the root has no incoming rule")
    image = apply_rule(node.rule, node.parent.state)
    target = BASIS[node.state]
    c = np.vdot(target, image)
    return bool(c != 0 and np.allclose(image, c * target, rtol=0, atol=1e-15))


def census_recurrence(c):
    """
    @brief (p, q) -> (q, p + q)
    """
    return GenerationCensus(c.depth + 1, c.ones, c.zeros + c.ones)


class VisitorInterface(object):
    """
    @brief Base interface for tree visitors
    """

    def processNode(self, node):
        """ Not implemented in abstract class. """
        raise NotImplementedError("Not implemented in abstract class")

    def postProcessNode(self, node):
        """ Optional - Not implemented in abstract class. """
        return True


class CensusVisitor(VisitorInterface):
    """
    Counts states per depth and validates every edge against the sigma matrices

    An edge is fixed by (parent state, rule, child state), so each distinct
    edge is checked once and its verdict reused.
    """

    def __init__(self, max_depth):
        self._zeros = [0] * (max_depth + 1)
        self._ones = [0] * (max_depth + 1)
        self._bad_edges = []
        self._verdicts = {}

    def processNode(self, node):
        if node.state == Level.Zero:
            self._zeros[node.depth] += 1
        else:
            self._ones[node.depth] += 1
        if node.rule == Rule.Root:
            return True
        edge = (node.parent.state, node.rule, node.state)
        if edge not in self._verdicts:
            self._verdicts[edge] = verify_matrix_semantics(node)
            if not self._verdicts[edge]:
                self._bad_edges.append(node.printState())
        return True

    @property
    def edgeVerdicts(self):
        return dict(self._verdicts)

    @property
    def badEdges(self):
        return list(self._bad_edges)

    def censuses(self):
        return [GenerationCensus(d, z, o) for d, (z, o) in enumerate(zip(self._zeros, self._ones))]


def walk(max_depth, visitor):
    """
    @brief Depth first traversal down to max_depth; memory stays O(max_depth)
    """
    stack = [root()]
    while stack:
        node = stack.pop()
        visitor.processNode(node)
        if node.depth < max_depth:
            stack.extend(reversed(step(node)))
        visitor.postProcessNode(node)
    return visitor


def _check_depth(max_depth):
    if not isinstance(max_depth, int) or max_depth < 0:
        raise ValidationError("depth", "must be an integer >= 0, got {!r}".format(max_depth))


def generate(max_depth, mode="tree"):
    """
    @brief Census for depths 0..max_depth

    mode "tree" materializes the tree depth first and is capped at depth 40;
    mode "counts" folds census_recurrence with exact integers.
    """
    _check_depth(max_depth)
    if mode == "counts":
        census = GenerationCensus(0, 1, 0)
        out = [census]
        for _ in range(max_depth):
            census = census_recurrence(census)
            out.append(census)
        return out
    if mode != "tree":
        raise ValidationError("mode", "expected 'tree' or 'counts', got {!r}".format(mode))
    if max_depth > TREE_DEPTH_CAP:
        raise ValidationError("depth", "tree mode is capped at depth {}; use counts mode".format(TREE_DEPTH_CAP))
    visitor = walk(max_depth, CensusVisitor(max_depth))
    if visitor.badEdges:
        log.error("[generate]", "edges failing the matrix check: {}".format(visitor.badEdges[:5]))
    return visitor.censuses()


def fibonacci(n):
    """
    @brief F(n) with F(1) = F(2) = 1
    """
    if n < 0:
        raise ValidationError("n", "must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def golden_ratio_error(depth):
    """
    @brief |total(depth + 1) / total(depth) - golden ratio|
    """
    _check_depth(depth)
    return abs(fibonacci(depth + 2) / fibonacci(depth + 1) - GOLDEN_RATIO)
