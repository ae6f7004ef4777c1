from hypothesis import strategies as st

from abcratio.core import Profile


@st.composite
def profiles(draw, max_m=6, max_n=8, min_m=1):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(st.sets(st.integers(0, m - 1), max_size=m), min_size=n, max_size=n))
    return Profile(m, sets)


@st.composite
def profile_and_k(draw, max_m=6, max_n=8, max_k=None):
    profile = draw(profiles(max_m, max_n))
    top = profile.num_candidates if max_k is None else min(max_k, profile.num_candidates)
    k = draw(st.integers(1, top))
    return profile, k


@st.composite
def party_list_profiles(draw, max_parties=4, max_size=6):
    sizes = draw(st.lists(st.integers(1, 3), min_size=1, max_size=max_parties))
    counts = draw(st.lists(st.integers(1, max_size), min_size=len(sizes), max_size=len(sizes)))
    ballots, start = [], 0
    for size, count in zip(sizes, counts):
        ballots += [list(range(start, start + size))] * count
        start += size
    return Profile(start, ballots)
