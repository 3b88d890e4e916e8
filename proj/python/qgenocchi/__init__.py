"""Exact q-Euler, q-Genocchi and q-Bernoulli numbers with identity checks."""

from fractions import Fraction

from . import _qgenocchi as _core
from ._qgenocchi import (
    PolyX,
    RatFn,
    identity_ids,
    oracle_check,
    q_bernoulli_number,
    q_euler_number,
    q_euler_poly,
    q_genocchi_number,
    q_genocchi_poly,
    q_int,
    q_int_signed,
    run_suite,
    verify,
)

__all__ = [
    "PolyX",
    "RatFn",
    "alt_power_sum",
    "bernoulli_number",
    "euler_number",
    "evaluate",
    "genocchi_number",
    "identity_ids",
    "limit_q1",
    "oracle_check",
    "q_bernoulli_number",
    "q_euler_number",
    "q_euler_poly",
    "q_genocchi_number",
    "q_genocchi_poly",
    "q_int",
    "q_int_signed",
    "run_suite",
    "verify",
]


def euler_number(n):
    return Fraction(_core.euler_number(n))


def genocchi_number(n):
    return Fraction(_core.genocchi_number(n))


def bernoulli_number(n):
    return Fraction(_core.bernoulli_number(n))


def alt_power_sum(m, n):
    return Fraction(_core.alt_power_sum(m, n))


def evaluate(f, q):
    """Exact value of a RatFn at a rational q (Fraction, int or "a/b")."""
    q = Fraction(q)
    return Fraction(f.eval(f"{q.numerator}/{q.denominator}"))


def limit_q1(f):
    return Fraction(f.eval_at_one())
