from math import gcd

from hypothesis import assume, strategies as st

from pptcode.triples import StPair


@st.composite
def st_pairs(draw, max_s=10**4):
    s = draw(st.integers(1, (max_s - 1) // 2).map(lambda k: 2 * k + 1))
    t = draw(st.integers(0, (s - 3) // 2).map(lambda k: 2 * k + 1))
    assume(gcd(s, t) == 1)
    return StPair(s, t)
