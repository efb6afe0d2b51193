"""The local minimum decision pipeline."""
from fractions import Fraction
from logging import getLogger
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .certificate import descent_certificate, require_certificate, verify_certificate
from .config import DecisionConfig
from .const import (
    AXIS_X,
    AXIS_Y,
    DEFAULT_MAX_KAPPA,
    DISCREPANCY_NOTE,
    KIND_AXIS_DESCENT,
    KIND_CURVE_DESCENT,
    KIND_SCALED_POINT_DESCENT,
    RULE_AXIS_CONDITION,
    RULE_AXIS_GATE,
    RULE_DEPTH_EXHAUSTED,
    RULE_DESCENT_SEARCH,
    RULE_DISCREPANCY,
    RULE_FACE_NEGATIVE,
    RULE_FACE_NONNEGATIVE,
    RULE_FORMS_EXHAUSTED,
    RULE_LEVEL_CLEAR,
    RULE_LEVEL_JOINT,
    RULE_LEVEL_VANISHES,
    RULE_PREFIX_FAILED,
    RULE_PREFIX_MIN,
    RULE_ROOT_CASE,
    RULE_TWO_FORM,
    RULE_WEAKLY_NONDEGENERATE,
    STATUS_UNRESOLVED,
)
from .error import CertificateError, NotStationary, PreconditionError, ZeroPolynomial
from .geometry import check_corner_condition, hull, southwest_edges, witness_signs
from .poly import BivariatePoly, Exponent
from .quasiform import (
    CharPoly,
    Decomposition,
    SolutionPoint,
    decompose,
    form_nonnegative,
    negativity_witness,
    point_signs,
    single_form_case,
    solution_point,
    solution_points,
)
from .realroots import AlgebraicNumber, isolate_roots, multiplicity_in, sign_at_root
from .substitution import search_descent
from .types import Certificate, Curve, NormalVector, TraceEntry, Verdict

_LOGGER = getLogger(__name__)


def joint_point(
    normal: NormalVector, u0: AlgebraicNumber, main: Exponent, g_sign: int
) -> Optional[SolutionPoint]:
    """A point with x^-A2 * y^A1 = u0 where x^chi * y^eta * g has sign -1."""
    if g_sign == 0:
        raise PreconditionError("The next characteristic polynomial vanishes at u0")
    chi, eta = main
    u_sign = u0.sign()
    for s in (1, -1):
        sx, sy = point_signs(normal, u_sign, s)
        if sx ** chi * sy ** eta * g_sign < 0:
            return solution_point(normal, u0, s)
    return None


def joint_criterion(normal: NormalVector, main: Exponent) -> int:
    """e1 * eta - e2 * chi; an odd value makes the sign system solvable."""
    e1, e2 = normal.direction
    chi, eta = main
    return e1 * eta - e2 * chi


def is_joint(
    normal: NormalVector,
    u0: AlgebraicNumber,
    char2: CharPoly,
    g_sign: Optional[int] = None,
) -> bool:
    """Whether x^-A2 * y^A1 = u0 and phi_2(x, y) < 0 has a solution."""
    if g_sign is None:
        g_sign = sign_at_root(char2.g, u0)
    if g_sign == 0:
        raise PreconditionError(f"{char2.g} vanishes at {u0}")
    if joint_criterion(normal, char2.main) % 2:
        return True
    chi, eta = char2.main
    u_sign = u0.sign()
    # a real odd root keeps the sign of u0
    power = eta if normal.a1 % 2 else chi
    return u_sign ** power * g_sign < 0


class AxisWitness(NamedTuple):
    axis: str
    degree: int
    coefficient: Fraction
    curve: Curve


def _axis_witness(p: BivariatePoly, axis: str) -> Optional[AxisWitness]:
    h = p.axis_restriction(axis)
    if h.is_zero:
        return None
    degree = h.low_degree
    coef = h.coeff(degree)
    if coef > 0 and degree % 2 == 0:
        return None
    if axis == AXIS_X:
        c1, _ = witness_signs(coef, (degree, 0))
        curve = Curve({1: c1}, {})
    else:
        _, c2 = witness_signs(coef, (0, degree))
        curve = Curve({}, {1: c2})
    return AxisWitness(axis, degree, coef, curve)


def axis_condition(
    p: BivariatePoly, normal: NormalVector, dec: Optional[Decomposition] = None
) -> Optional[AxisWitness]:
    """An axis descent when the main form vanishes on an axis and p does not
    start with a positive even term there."""
    dec = dec or decompose(p, normal)
    first = dec[0]
    if first.trailing[0] > 0:
        found = _axis_witness(p, AXIS_Y)
        if found:
            return found
    if first.main[1] > 0:
        found = _axis_witness(p, AXIS_X)
        if found:
            return found
    return None


def perturbed_descent(
    p: BivariatePoly,
    normal: NormalVector,
    u0: AlgebraicNumber,
    points: Optional[Sequence[SolutionPoint]] = None,
    max_kappa: int = DEFAULT_MAX_KAPPA,
) -> Certificate:
    """Find kappa and a sign making (x0 t^A1, y0 t^A2 (1 +- t^kappa)) descend."""
    points = list(points) if points else solution_points(normal, u0)
    for kappa in range(1, max_kappa + 1):
        for point in points:
            for sign in (1, -1):
                curve = point.curve(normal, kappa, sign)
                certificate = descent_certificate(p, curve, KIND_CURVE_DESCENT)
                if certificate:
                    _LOGGER.debug("Perturbation kappa=%d sign=%d descends", kappa, sign)
                    return certificate
    raise CertificateError(f"No perturbed descent for {p} at {u0} up to {max_kappa}")


def _not_min(
    p: BivariatePoly,
    curve: Curve,
    kind: str,
    trace: List[TraceEntry],
    entry: TraceEntry,
) -> Verdict:
    certificate = require_certificate(p, curve, kind)
    _LOGGER.info("%s is not a local minimum: %s", p, certificate)
    return Verdict.not_local_min(certificate, trace + [entry])


def _two_dimensional(p: BivariatePoly) -> bool:
    return hull(p.support()).dimension == 2


def _discrepancy(normal: NormalVector, data: Dict[str, Any]) -> TraceEntry:
    """Flags a face whose descent comes from the joint sign system."""
    note = {"criterion": data["criterion"], "g_sign": data["g_sign"]}
    return TraceEntry(RULE_DISCREPANCY, normal, dict(note, note=DISCREPANCY_NOTE))


def _gate(p: BivariatePoly, trace: List[TraceEntry]) -> Optional[Verdict]:
    gate = check_corner_condition(p)
    if gate:
        return None
    entry = TraceEntry(gate.rule, None, dict(gate))
    return _not_min(p, gate.curve, gate.kind, trace, entry)


def _final_axis_gate(p: BivariatePoly, trace: List[TraceEntry]) -> Optional[Verdict]:
    for axis in (AXIS_X, AXIS_Y):
        found = _axis_witness(p, axis)
        if found:
            data = {
                "axis": axis,
                "degree": found.degree,
                "coefficient": found.coefficient,
            }
            entry = TraceEntry(RULE_AXIS_GATE, None, data)
            return _not_min(p, found.curve, KIND_AXIS_DESCENT, trace, entry)
    return None


def two_form_decide(
    q: BivariatePoly, normal: NormalVector, max_kappa: int = DEFAULT_MAX_KAPPA
) -> Verdict:
    """Decide a sum of exactly two quasi-homogeneous forms; never Unresolved."""
    dec = decompose(q, normal)
    if len(dec) != 2:
        raise PreconditionError(f"{q} has {len(dec)} forms along {normal}, not 2")
    if not _two_dimensional(q):
        return single_form_case(q)
    trace: List[TraceEntry] = []
    verdict = _gate(q, trace)
    if verdict:
        return verdict
    first = dec[0]
    if not form_nonnegative(first):
        witness = negativity_witness(first)
        entry = TraceEntry(RULE_FACE_NEGATIVE, normal, {"point": list(witness.point)})
        return _not_min(q, witness.curve, KIND_SCALED_POINT_DESCENT, trace, entry)
    g1 = first.characteristic().g
    roots = isolate_roots(g1)
    data = {"g": g1, "roots": [str(r) for r, _ in roots]}
    trace.append(TraceEntry(RULE_FACE_NONNEGATIVE, normal, data))
    if roots:
        found = axis_condition(q, normal, dec)
        if found:
            entry = TraceEntry(RULE_AXIS_CONDITION, normal, {"axis": found.axis})
            return _not_min(q, found.curve, KIND_AXIS_DESCENT, trace, entry)
    char2 = dec[1].characteristic()
    for u0, k in roots:
        l = multiplicity_in(char2.g, u0)
        data = {"u0": u0, "k": k, "l": l}
        if l >= k:
            entry = TraceEntry(RULE_ROOT_CASE, normal, dict(data, case="absorbed"))
            trace.append(entry)
            continue
        if l % 2:
            certificate = perturbed_descent(q, normal, u0, max_kappa=max_kappa)
            trace.append(TraceEntry(RULE_ROOT_CASE, normal, dict(data, case="odd")))
            return Verdict.not_local_min(certificate, trace)
        # sign of the reduced second polynomial g2 / (u - u0)^l at u0
        g_sign = sign_at_root(char2.g.derivative(l), u0)
        main = (char2.main[0] - l * normal.a2, char2.main[1])
        point = joint_point(normal, u0, main, g_sign)
        data.update(case="even", g_sign=g_sign, criterion=joint_criterion(normal, main))
        trace.append(TraceEntry(RULE_ROOT_CASE, normal, data))
        if point is None:
            continue
        trace.append(_discrepancy(normal, data))
        if l == 0:
            certificate = require_certificate(
                q, point.curve(normal), KIND_SCALED_POINT_DESCENT
            )
        else:
            certificate = perturbed_descent(q, normal, u0, [point], max_kappa)
        return Verdict.not_local_min(certificate, trace)
    verdict = _final_axis_gate(q, trace)
    if verdict:
        return verdict
    trace.append(TraceEntry(RULE_TWO_FORM, normal, {"levels": dec.levels}))
    return Verdict.local_min(trace)


def _prefix_local_min(
    dec: Decomposition, level: int, max_kappa: int
) -> Tuple[bool, str]:
    """Whether the forms before ``level`` (1-based) sum to a local minimum."""
    if level == 2:
        return True, "main form"
    prefix = two_form_decide(dec.partial_sum(2), dec.normal, max_kappa)
    if not prefix.is_local_min:
        return False, f"first two forms: {prefix.status}"
    for index in range(2, level - 1):
        if not form_nonnegative(dec[index]):
            return False, f"form {index + 1} is not nonnegative"
    return True, f"first {level - 1} forms"


def analyze_faces(
    p: BivariatePoly, depth: int = 4, max_kappa: int = DEFAULT_MAX_KAPPA
) -> Verdict:
    """Examine the group-3 southwestern faces of p, form by form.

    Requires a stationary p with a two-dimensional Newton polygon whose corner
    terms are positive with even exponents.
    """
    if not p.is_stationary_origin():
        raise NotStationary(p)
    if not _two_dimensional(p):
        raise PreconditionError(f"{p} has a degenerate Newton polygon")
    if not check_corner_condition(p):
        raise PreconditionError(f"Corner terms of {p} fail the sign test")
    trace: List[TraceEntry] = []
    unresolved: List[NormalVector] = []
    faces = [face for face in southwest_edges(p) if face.group == 3]
    for face in faces:
        normal = face.normal
        dec = decompose(p, normal)
        first = dec[0]
        _LOGGER.debug("Examining face %s with levels %s", normal, dec.levels)
        if not form_nonnegative(first):
            witness = negativity_witness(first)
            entry = TraceEntry(
                RULE_FACE_NEGATIVE,
                normal,
                {"point": list(witness.point), "value": witness.value},
            )
            return _not_min(p, witness.curve, KIND_SCALED_POINT_DESCENT, trace, entry)
        g1 = first.characteristic().g
        roots = isolate_roots(g1)
        if not roots:
            trace.append(TraceEntry(RULE_WEAKLY_NONDEGENERATE, normal, {"g": g1}))
            continue
        trace.append(
            TraceEntry(
                RULE_FACE_NONNEGATIVE,
                normal,
                {"g": g1, "roots": [[str(r), k] for r, k in roots]},
            )
        )
        found = axis_condition(p, normal, dec)
        if found:
            entry = TraceEntry(RULE_AXIS_CONDITION, normal, {"axis": found.axis})
            return _not_min(p, found.curve, KIND_AXIS_DESCENT, trace, entry)
        pending = [root for root, _ in roots]
        settled = False
        for level in range(2, depth + 1):
            if level > len(dec):
                data = {"forms": len(dec)}
                trace.append(TraceEntry(RULE_FORMS_EXHAUSTED, normal, data))
                break
            char = dec[level - 1].characteristic()
            still: List[AlgebraicNumber] = []
            for u0 in pending:
                g_sign = sign_at_root(char.g, u0)
                data = {"level": level, "u0": u0, "g": char.g}
                if g_sign == 0:
                    trace.append(TraceEntry(RULE_LEVEL_VANISHES, normal, data))
                    still.append(u0)
                    continue
                data.update(g_sign=g_sign, criterion=joint_criterion(normal, char.main))
                point = joint_point(normal, u0, char.main, g_sign)
                if is_joint(normal, u0, char, g_sign) != (point is not None):
                    raise CertificateError(f"Sign systems disagree at {u0}")
                if point is not None:
                    data["point"] = str(point)
                    trace.append(TraceEntry(RULE_LEVEL_JOINT, normal, data))
                    entry = _discrepancy(normal, data)
                    return _not_min(
                        p, point.curve(normal), KIND_SCALED_POINT_DESCENT, trace, entry
                    )
                trace.append(TraceEntry(RULE_LEVEL_CLEAR, normal, data))
            if not still:
                holds, reason = _prefix_local_min(dec, level, max_kappa)
                rule = RULE_PREFIX_MIN if holds else RULE_PREFIX_FAILED
                data = {"level": level, "reason": reason}
                trace.append(TraceEntry(rule, normal, data))
                settled = holds
                break
            pending = still
        else:
            trace.append(TraceEntry(RULE_DEPTH_EXHAUSTED, normal, {"depth": depth}))
        if not settled:
            unresolved.append(normal)
    if unresolved:
        return Verdict(STATUS_UNRESOLVED, trace=trace, unresolved=unresolved)
    return Verdict.local_min(trace)


def _settle(p: BivariatePoly, verdict: Verdict) -> Verdict:
    certificate = verdict.certificate
    if certificate is not None and not verify_certificate(p, certificate):
        raise CertificateError(f"{certificate} does not verify for {p}")
    _LOGGER.info("Verdict for %s: %s", p, verdict.status)
    return verdict


def decide(p: BivariatePoly, config: Optional[DecisionConfig] = None) -> Verdict:
    """Decide whether the origin is a local minimum of p."""
    config = config or DecisionConfig()
    if p.is_zero:
        raise ZeroPolynomial("Cannot decide the zero polynomial")
    if not p.is_stationary_origin():
        raise NotStationary(p)
    if not _two_dimensional(p):
        return _settle(p, single_form_case(p))
    verdict = _gate(p, [])
    if verdict:
        return _settle(p, verdict)
    verdict = analyze_faces(p, config.depth, config.max_kappa)
    if not verdict.is_unresolved:
        return _settle(p, verdict)
    trace = list(verdict.trace)
    for normal in verdict.unresolved:
        if len(decompose(p, normal)) == 2:
            found = two_form_decide(p, normal, config.max_kappa)
            return _settle(p, found.with_trace(trace))
    faces = []
    for normal in verdict.unresolved:
        g1 = decompose(p, normal)[0].characteristic().g
        faces.append((normal, [root for root, _ in isolate_roots(g1)]))
    result = search_descent(p, faces, config)
    entry = TraceEntry(RULE_DESCENT_SEARCH, None, dict(result.budget))
    if result.certificate:
        _LOGGER.info("Descent search found %s", result.certificate)
        return _settle(p, Verdict.not_local_min(result.certificate, trace + [entry]))
    _LOGGER.warning("Descent search exhausted its budget for %s", p)
    return Verdict(
        STATUS_UNRESOLVED,
        trace=trace + [entry],
        unresolved=verdict.unresolved,
        budget=dict(result.budget),
    )
