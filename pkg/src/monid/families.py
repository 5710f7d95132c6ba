"""Named identities and word families.

Letter names are fixed so generated identities are stable fixtures:
indexed letters are ``x0, x1, ...`` and ``y0, y1, ...``; the plain
letters are ``x, y, z, s, t`` and ``zoo`` (the "infinity" letter).  The
``w``/``z`` families use ``x1.., t1.., z1.., s1..``.

Members with one subscript that starts at ``0`` (``epsilon``, ``zeta``,
``eta``, ``nu``) take that subscript as their parameter, so
``family("epsilon", 0)`` is ``y1 x0 x y1 x = y1 x0 y1 x x``.

Canonical names: ``kappa1``, ``delta2_1``, ``w_pair1_12_21`` (a
permutation written as its image string), and the fixed upper-case
names below.
"""

from __future__ import annotations

import itertools
import re
from typing import Sequence

from .identities import I11, Identity, parse_identity
from .words import Word


def X(i: int) -> str:
    return f"x{i}"


def Y(i: int) -> str:
    return f"y{i}"


def b(s: int, q: int = 1) -> Word:
    """``x_{s-1} x_s x_{s-2} x_{s-1} ... x_{q-1} x_q``; empty when ``s == 0`` or ``q == s + 1``."""
    if s < 0:
        raise ValueError("b needs s >= 0")
    if s == 0:
        return ()
    if not 1 <= q <= s + 1:
        raise ValueError(f"b({s},{q}) needs 1 <= q <= s")
    out: list = []
    for j in range(s, q - 1, -1):
        out += [X(j - 1), X(j)]
    return tuple(out)


def _ident(lhs: Sequence[str], rhs: Sequence[str], name: str) -> Identity:
    return Identity(tuple(lhs), tuple(rhs), name)


FIXED = {
    "I11": I11,
    "XYXY": parse_identity("x y x y = x x y y", "XYXY"),
    "XYTXY": parse_identity("x y t x y = x y t y x", "XYTXY"),
    "XTYXY": parse_identity("x t y x y = x t y y x", "XTYXY"),
    "XZYT": parse_identity("x z y t x y zoo zoo z = x z y t y x zoo zoo z", "XZYT"),
    "XSYTXY": parse_identity("x s y t x y = x s y t y x", "XSYTXY"),
    "ETA1T": parse_identity("x x1 y x y x0 x1 = x x1 y y x x0 x1", "ETA1T"),
    "LRB_AX": parse_identity("x y = x y x", "LRB_AX"),
}


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def alpha(k: int) -> Identity:
    _need(k >= 1, "alpha needs k >= 1")
    tail = (X(k - 1), X(k), Y(k)) + b(k - 1)
    return _ident((X(k), Y(k)) + tail, (Y(k), X(k)) + tail, f"alpha{k}")


def beta(k: int) -> Identity:
    _need(k >= 1, "beta needs k >= 1")
    return _ident(("x", X(k), "x") + b(k), (X(k), "x", "x") + b(k), f"beta{k}")


def gamma(k: int) -> Identity:
    _need(k >= 1, "gamma needs k >= 1")
    return _ident(("y1", "y0", X(k), "y1") + b(k), ("y1", "y0", "y1", X(k)) + b(k), f"gamma{k}")


def delta(k: int, m: int) -> Identity:
    _need(k >= 1 and 1 <= m <= k, "delta needs 1 <= m <= k")
    tail = b(k, m) + (Y(m),) + b(m - 1)
    return _ident((Y(m + 1), Y(m), X(k), Y(m + 1)) + tail,
                  (Y(m + 1), Y(m), Y(m + 1), X(k)) + tail, f"delta{k}_{m}")


def epsilon(j: int) -> Identity:
    _need(j >= 0, "epsilon needs j >= 0")
    k = j + 1
    return _ident((Y(k), X(j), "x", Y(k), "x") + b(j),
                  (Y(k), X(j), Y(k), "x", "x") + b(j), f"epsilon{j}")


def kappa(k: int) -> Identity:
    _need(k >= 1, "kappa needs k >= 1")
    return _ident(("x", X(k), "x") + b(k), ("x", "x", X(k)) + b(k), f"kappa{k}")


def zeta(j: int) -> Identity:
    _need(j >= 0, "zeta needs j >= 0")
    head = ("x", "y0", "y", X(j))
    return _ident(head + ("x", "y") + b(j), head + ("y", "x") + b(j), f"zeta{j}")


def lambda_(k: int, m: int) -> Identity:
    _need(k >= 1 and 1 <= m <= k, "lambda needs 1 <= m <= k")
    head = ("x", Y(m), "y", X(k))
    tail = b(k, m) + (Y(m),) + b(m - 1)
    return _ident(head + ("x", "y") + tail, head + ("y", "x") + tail, f"lambda{k}_{m}")


def eta(j: int) -> Identity:
    _need(j >= 0, "eta needs j >= 0")
    head = ("x", "y1", "y", "y0")
    tail = (X(j), "y1") + b(j)
    return _ident(head + ("x", "y") + tail, head + ("y", "x") + tail, f"eta{j}")


def mu(k: int, m: int) -> Identity:
    _need(k >= 1 and 1 <= m <= k, "mu needs 1 <= m <= k")
    head = ("x", Y(m + 1), "y", Y(m))
    tail = (X(k), Y(m + 1)) + b(k, m) + (Y(m),) + b(m - 1)
    return _ident(head + ("x", "y") + tail, head + ("y", "x") + tail, f"mu{k}_{m}")


def nu(j: int) -> Identity:
    _need(j >= 0, "nu needs j >= 0")
    head = ("x", X(j), "y", "z")
    tail = ("zoo", "zoo", "z") + b(j)
    return _ident(head + ("x", "y") + tail, head + ("y", "x") + tail, f"nu{j}")


def sqmerge(n: int) -> Identity:
    _need(n >= 1, "sqmerge needs n >= 1")
    letters = [X(i) for i in range(1, n + 1)]
    return _ident([a for a in letters for _ in range(2)], letters * 2, f"sqmerge{n}")


def _perm(p: Sequence[int], size: int) -> tuple:
    p = tuple(p)
    _need(sorted(p) == list(range(1, size + 1)), f"expected a permutation of 1..{size}, got {p}")
    return p


def _perm_name(p: Sequence[int]) -> str:
    return "".join(str(i) for i in p)


def identity_perm(size: int) -> tuple:
    return tuple(range(1, size + 1))


def _w_words(n: int, pi, tau) -> tuple:
    pi, tau = _perm(pi, 2 * n), _perm(tau, 2 * n)
    head: list = []
    for i in range(1, n + 1):
        head += [f"x{i}", f"t{i}"]
    head.append("x")
    head += [f"z{i}" for i in range(1, 2 * n + 1)]
    head.append("y")
    for i in range(n + 1, 2 * n + 1):
        head += [f"t{i}", f"x{i}"]
    head.append("t")
    tail: list = []
    for i in range(1, 2 * n + 1):
        tail += [f"x{pi[i - 1]}", f"z{tau[i - 1]}"]
    return tuple(head), tuple(tail)


def w_pair(n: int, pi=None, tau=None) -> Identity:
    _need(n >= 1, "w_pair needs n >= 1")
    pi = pi or identity_perm(2 * n)
    tau = tau or identity_perm(2 * n)
    head, tail = _w_words(n, pi, tau)
    return _ident(head + ("x", "y") + tail, head + ("y", "x") + tail,
                  f"w_pair{n}_{_perm_name(pi)}_{_perm_name(tau)}")


def _z_head(n: int) -> list:
    head: list = []
    for i in range(1, 2 * n + 1):
        head += [f"x{i}", f"t{i}"]
    head.append("x")
    for i in range(1, n + 1):
        head += [f"z{i}", f"s{i}"]
    head.append("y")
    head += [f"z{n + i}" for i in range(1, n + 1)]
    return head


def z_pair(n: int, pi=None, tau=None) -> Identity:
    _need(n >= 1, "z_pair needs n >= 1")
    pi = _perm(pi or identity_perm(2 * n), 2 * n)
    tau = _perm(tau or identity_perm(2 * n), 2 * n)
    head = tuple(_z_head(n))
    tail: list = []
    for i in range(1, 2 * n + 1):
        tail += [f"x{pi[i - 1]}", f"z{tau[i - 1]}"]
    tail.append("t")
    tail += [f"s{i}" for i in range(1, n + 1)]
    tail = tuple(tail)
    return _ident(head + ("x", "y") + tail, head + ("y", "x") + tail,
                  f"z_pair{n}_{_perm_name(pi)}_{_perm_name(tau)}")


def z_theta(n: int, theta=None, a: str = "xy") -> Word:
    """The word ``z_n[θ]`` with the middle pair ``a`` (``"xy"`` or ``"yx"``)."""
    _need(n >= 1, "z_theta needs n >= 1")
    _need(a in ("xy", "yx"), "a must be 'xy' or 'yx'")
    theta = _perm(theta or identity_perm(n), n)
    out = _z_head(n) + list(a)
    for i in range(1, 2 * n + 1):
        out += [f"x{i}", f"z{i}"]
    out.append("t")
    out += [f"s{theta[i - 1]}" for i in range(1, n + 1)]
    return tuple(out)


def permutations(size: int) -> list:
    return [tuple(p) for p in itertools.permutations(range(1, size + 1))]


def omega(which: int, n_max: int) -> list:
    """The base identities of Ω₁ or Ω₂ plus every pair with ``n <= n_max``."""
    _need(which in (1, 2), "omega is 1 or 2")
    base = [I11, kappa(1) if which == 1 else eta(1)]
    maker = w_pair if which == 1 else z_pair
    out = list(base)
    for n in range(1, n_max + 1):
        for pi in permutations(2 * n):
            for tau in permutations(2 * n):
                out.append(maker(n, pi, tau))
    return out


def phi_pool(k_max: int) -> list:
    """Φ truncated to ``k <= k_max``."""
    out = [I11, FIXED["XYXY"]]
    for k in range(1, k_max + 1):
        out.append(gamma(k))
        out += [delta(k, m) for m in range(1, k + 1)]
        out.append(epsilon(k - 1))
    return out


def psi_pool(which: int, k_max: int) -> list:
    """Ψ₁ or Ψ₂ truncated to ``k <= k_max``."""
    _need(which in (1, 2), "psi is 1 or 2")
    out = [I11, FIXED["XTYXY"], FIXED["XZYT"]]
    for k in range(1, k_max + 1):
        out.append(zeta(k - 1))
        out += [lambda_(k, m) for m in range(1, k + 1)]
        out.append(eta(k - 1))
        out += [mu(k, m) for m in range(1, k + 1)]
        if which == 1:
            out.append(nu(k - 1))
    if which == 2:
        out += [nu(0), nu(1)]
    return out


# name -> (generator, arity description)
FAMILIES = {
    "alpha": (alpha, "k"),
    "beta": (beta, "k"),
    "gamma": (gamma, "k"),
    "delta": (delta, "k m"),
    "epsilon": (epsilon, "j (subscript, from 0)"),
    "kappa": (kappa, "k"),
    "zeta": (zeta, "j (subscript, from 0)"),
    "lambda": (lambda_, "k m"),
    "eta": (eta, "j (subscript, from 0)"),
    "mu": (mu, "k m"),
    "nu": (nu, "j (subscript, from 0)"),
    "sqmerge": (sqmerge, "n"),
    "w_pair": (w_pair, "n [pi tau]"),
    "z_pair": (z_pair, "n [pi tau]"),
}

WORD_FAMILIES = {
    "b": (b, "s [q]"),
    "z_theta": (z_theta, "n [theta] [xy|yx]"),
}


def family(name: str, *params) -> Identity:
    if name in FIXED:
        _need(not params, f"{name} takes no parameters")
        return FIXED[name]
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    return FAMILIES[name][0](*params)


def parse_perm(text: str) -> tuple:
    return tuple(int(c) for c in text)


_NAME = re.compile(r"([a-z_]+?)(\d+(?:_\d+)*)")


def resolve(name: str) -> Identity:
    """Inverse of the canonical names: ``resolve("delta2_1") == delta(2, 1)``."""
    if name in FIXED:
        return FIXED[name]
    m = _NAME.fullmatch(name)
    if m is None or m.group(1) not in FAMILIES:
        raise ValueError(f"unknown identity name {name!r}")
    fam, params = m.group(1), m.group(2).split("_")
    if fam in ("w_pair", "z_pair"):
        n = int(params[0])
        extra = [parse_perm(p) for p in params[1:]]
        return FAMILIES[fam][0](n, *extra)
    return FAMILIES[fam][0](*(int(p) for p in params))


def resolve_set(names: str) -> list:
    """Comma-separated names; ``omega1_2`` expands to Ω₁ with ``n <= 2``."""
    out: list = []
    for raw in names.split(","):
        raw = raw.strip()
        if not raw:
            continue
        m = re.fullmatch(r"omega([12])_(\d+)", raw)
        if m:
            items = omega(int(m.group(1)), int(m.group(2)))
        else:
            items = [resolve(raw)]
        for ax in items:
            if ax not in out:
                out.append(ax)
    return out
