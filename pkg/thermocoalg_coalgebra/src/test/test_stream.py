import unittest

from thermocoalg_common.core.errors import ValidationError

from thermocoalg_coalgebra.core import stream
from thermocoalg_coalgebra.core.stream import LassoStream, StreamPrefix


class TestStreamPrefix(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_destructor(self):
        msg = """
        gamma splits a prefix into head and tail"""
        head, tail = stream.stream_destructor(StreamPrefix("abc"))
        self.assertEqual("a", head, msg)
        self.assertEqual(StreamPrefix("bc"), tail, msg)
        head, tail = stream.stream_destructor(StreamPrefix("a"))
        self.assertEqual(("a", StreamPrefix()), (head, tail), msg)

    def test_cons_inverts_destructor(self):
        u = StreamPrefix(["red", "blue", "blue", "red"])
        msg = """
        cons(head, tail) should give back the prefix"""
        self.assertEqual(u, stream.cons(*stream.stream_destructor(u)), msg)

    def test_empty(self):
        msg = """
        the empty prefix has no head"""
        with self.assertRaises(ValidationError, msg=msg):
            stream.stream_destructor(StreamPrefix())

    def test_first_difference(self):
        msg = """
        the first mismatch is reported, extensions are not mismatches"""
        self.assertEqual(1, StreamPrefix("abab").firstDifference(StreamPrefix("aabb")), msg)
        self.assertIsNone(StreamPrefix("ab").firstDifference(StreamPrefix("abc")), msg)

    def test_str(self):
        msg = """
        printing joins the colors with spaces"""
        self.assertEqual("red blue", str(StreamPrefix(["red", "blue"])), msg)


class TestLassoStream(unittest.TestCase):

    def setUp(self):
        self.longMessage = True

    def test_canonical_period(self):
        msg = """
        a repeated cycle should shrink to its primitive period"""
        self.assertEqual(LassoStream((), "a"), LassoStream((), "aaa"), msg)
        self.assertEqual(("a", "b"), LassoStream((), "abab").cycle, msg)

    def test_canonical_stem(self):
        msg = """
        a stem ending like the cycle should be absorbed into a rotated cycle"""
        u = LassoStream("xa", "ba")
        self.assertEqual(("x",), u.stem, msg)
        self.assertEqual(("a", "b"), u.cycle, msg)
        self.assertEqual(StreamPrefix("xababa"), u.prefix(6), msg)
        self.assertEqual(LassoStream((), "a"), LassoStream("aa", "a"), msg)

    def test_destructor(self):
        u = LassoStream("x", "ab")
        msg = """
        head and tail act on the exact stream"""
        self.assertEqual(("x", LassoStream((), "ab")), u.destruct(), msg)
        self.assertEqual(LassoStream((), "ba"), u.tail.tail, msg)
        self.assertEqual(u.tail, u.tail.tail.tail, msg)

    def test_prefix(self):
        u = LassoStream("xy", "abc")
        msg = """
        prefixes read the stem, then cycle around"""
        self.assertEqual(StreamPrefix("xyabcab"), u.prefix(7), msg)
        self.assertEqual("c", u.at(10), msg)
        self.assertFalse(u.isPeriodic(), msg)

    def test_empty_cycle(self):
        msg = """
        a lasso without a cycle is not a stream"""
        with self.assertRaises(ValidationError, msg=msg):
            LassoStream("ab", ())


if __name__ == "__main__":
    unittest.main()
