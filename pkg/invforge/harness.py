# Copyright (c) 2018-present Invforge Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Randomized numeric verification. Every sample draws from its own stream
seeded by (seed, sample index), so reports do not depend on the order in
which samples are evaluated.
"""

import random

import numpy
import sympy

from invforge import exception
from invforge import groupaction as ga
from invforge import invstructure as ist
from invforge import jetspace as js
from invforge import movingframe as mf
from invforge import symkernel as sk
from invforge.schemas import (EquivalenceReport, InvarianceFailure,
                              InvarianceReport, RankReport, SignatureSample)
from invforge.util import memoized

U_RANGE = (-1.0, 1.0)
V_RANGE = (0.5, 2.0)
MAX_ATTEMPTS = 1000
RANK_THRESHOLD = 1e-8
MAX_INVARIANCE_ORDER = 4

CONSISTENT = "consistent"
INEQUIVALENT = "inequivalent"
INCONCLUSIVE = "inconclusive"

SIGNATURE_LABELS = ("I11", "I03", "Du I11", "Dv I11")

TEST_CORPUS = ("v^3", "exp(u)", "u + v^2", "exp(u) + v^3", "u^2 + u*v^3",
               "sin(u) + v^3")


def sample_stream(seed, index):
    return random.Random("%s:%d" % (seed, index))


@memoized
def _jet_expressions(f, order):
    return tuple(sorted(js.concrete_jet(f, order).items()))


def jets_at(f, point, order):
    u, v = point
    return {
        key: sk.eval_numeric(e, {sk.U: u, sk.V: v})
        for key, e in _jet_expressions(f, order)
    }


def _point_values(jets, point):
    values = {sk.U: point[0], sk.V: point[1]}
    values.update({sk.jet(*key): value for key, value in jets.items()})
    return values


def regular_point(f, rng, u_range=U_RANGE, v_range=V_RANGE):
    """ Rejection sampling of a point with W != 0 in the sampling box """
    for _ in range(MAX_ATTEMPTS):
        point = (rng.uniform(*u_range), rng.uniform(*v_range))
        try:
            jets = jets_at(f, point, 2)
        except exception.NumericDomain:
            continue
        v = point[1]
        W = mf.relative_W(jets, v)
        if mf.is_regular_value(W, jets[(0, 0)], v, jets[(0, 1)],
                               jets[(0, 2)]):
            return point
    raise exception.NoRegularPoint(f, MAX_ATTEMPTS)


def numeric_rank(matrix, threshold=RANK_THRESHOLD):
    matrix = numpy.atleast_2d(numpy.asarray(matrix, dtype=float))
    if not matrix.size:
        return 0
    singular = numpy.linalg.svd(matrix, compute_uv=False)
    if not len(singular):
        return 0
    return int(numpy.sum(singular > threshold * max(1.0, singular[0])))


#
# Invariance
#


def _relative_error(lhs, rhs):
    return abs(lhs - rhs) / (1 + abs(rhs))


def _invariance_sample(f, order, indices, rng, taylor_degree):
    point = regular_point(f, rng)
    g = ga.random_element(rng.randrange(2**31), ga.NUMERIC, taylor_degree,
                          anchor=point[0])
    jets = jets_at(f, point, order)
    transformed = ga.transform_jet(g, jets, order, point=point)
    u_new, v_new, _ = ga.act_point(g, (point[0], point[1], jets[(0, 0)]))
    before = _point_values(jets, point)
    after = _point_values(transformed, (u_new, v_new))
    results = []
    for index in indices:
        expr = mf.normalized_invariant(*index).expr
        results.append((index, sk.eval_numeric(expr, after),
                        sk.eval_numeric(expr, before)))
    return point, g, results


def invariance_test(f, order, n_samples, seed, tol=1e-9, taylor_degree=None,
                    progress=None):
    """
    Evaluates every non-phantom I^ij, i+j <= order, on the jets of f at a
    random regular point and on their image under a random element of the
    group, and reports the largest relative deviation.
    """
    if not 2 <= order <= MAX_INVARIANCE_ORDER:
        raise exception.InvalidOrder(
            order, "invariance tests support orders 2..%d" %
            MAX_INVARIANCE_ORDER)
    if n_samples < 1:
        raise ValueError("At least one sample is required")
    taylor_degree = taylor_degree or order + 2
    indices = mf.non_phantom_indices(order)
    max_error = 0.0
    failures = []
    ranges = {}
    for k in range(n_samples):
        rng = sample_stream(seed, k)
        for _ in range(MAX_ATTEMPTS):
            try:
                point, g, results = _invariance_sample(
                    f, order, indices, rng, taylor_degree)
                break
            except exception.NumericDomain:
                continue
        else:
            raise exception.NoRegularPoint(f, MAX_ATTEMPTS)
        for index, lhs, rhs in results:
            error = _relative_error(lhs, rhs)
            max_error = max(max_error, error)
            label = "I%d%d" % index
            low, high = ranges.get(label, (rhs, rhs))
            ranges[label] = [min(low, rhs), max(high, rhs)]
            if error > tol:
                failures.append(
                    InvarianceFailure(
                        f=str(f),
                        point=list(point),
                        element=g.to_json(),
                        index=list(index),
                        lhs=lhs,
                        rhs=rhs))
        if progress:
            progress(k + 1, n_samples)
    return InvarianceReport(
        f=str(f),
        order=order,
        seed=seed,
        tol=tol,
        samples=n_samples,
        maxRelError=max_error,
        failures=failures,
        ranges=ranges,
        passed=not failures)


#
# Signatures
#


def _signature_symbols():
    return (sk.invariant_symbol(1, 1), sk.invariant_symbol(0, 3),
            ist.word_symbol("u", (1, 1)), ist.word_symbol("v", (1, 1)))


@memoized
def _signature_functions(f):
    """ Signature components of f and their gradients as (u, v) functions """
    bindings = js.jet_bindings(f, 3)
    values = []
    gradients = []
    for s in _signature_symbols():
        expr = sk.substitute(ist.closed_form(s), bindings)
        values.append(expr)
        gradients.append((sympy.diff(expr, sk.U), sympy.diff(expr, sk.V)))
    return tuple(values), tuple(gradients)


def signature_at(f, point):
    values, _ = _signature_functions(f)
    at = {sk.U: point[0], sk.V: point[1]}
    return numpy.array([sk.eval_numeric(e, at) for e in values])


def signature_jacobian(f, point):
    _, gradients = _signature_functions(f)
    at = {sk.U: point[0], sk.V: point[1]}
    return numpy.array([[sk.eval_numeric(e, at) for e in row]
                        for row in gradients])


def signature(f, n_samples, seed):
    samples = []
    for k in range(n_samples):
        rng = sample_stream(seed, k)
        for _ in range(MAX_ATTEMPTS):
            point = regular_point(f, rng)
            try:
                values = signature_at(f, point)
            except exception.NumericDomain:
                continue
            samples.append(
                SignatureSample(point=list(point),
                                values=[float(x) for x in values],
                                regularity=mf.REGULAR))
            break
        else:
            raise exception.NoRegularPoint(f, MAX_ATTEMPTS)
    return samples


def signature_rank(f, samples):
    ranks = [0]
    for sample in samples:
        try:
            ranks.append(numeric_rank(signature_jacobian(f, sample.point)))
        except exception.NumericDomain:
            continue
    return max(ranks)


def _matching_coordinates(jacobian, rank):
    if rank == 1:
        norms = numpy.linalg.norm(jacobian, axis=1)
        return [int(numpy.argmax(norms))]
    best, pair = -1.0, [0, 1]
    n = jacobian.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            det = abs(numpy.linalg.det(jacobian[[a, b], :]))
            if det > best:
                best, pair = det, [a, b]
    return pair


def _solve_signature(f, target, coordinates, start, iterations=50):
    """ Gauss-Newton for a point of f whose signature matches `target` """
    point = numpy.array(start, dtype=float)
    goal = target[coordinates]
    for _ in range(iterations):
        try:
            residual = signature_at(f, point)[coordinates] - goal
            if numpy.max(numpy.abs(residual)) <= 1e-13 * (
                    1 + numpy.max(numpy.abs(goal))):
                return point
            jacobian = signature_jacobian(f, point)[coordinates, :]
            step = numpy.linalg.lstsq(jacobian, -residual, rcond=None)[0]
        except (exception.NumericDomain, numpy.linalg.LinAlgError):
            return None
        point = point + step
        if not numpy.all(numpy.isfinite(point)) or abs(point[1]) < 1e-12:
            return None
    return None


def _match_direction(f_from, samples_from, f_to, samples_to, rank, tol):
    """ (matched count, largest distance, mismatch found) """
    targets = numpy.array([s.values for s in samples_to])
    matched, worst, mismatch = 0, 0.0, False
    for sample in samples_from:
        target = numpy.array(sample.values)
        scale = numpy.max(numpy.abs(target))
        try:
            jacobian = signature_jacobian(f_from, sample.point)
        except exception.NumericDomain:
            continue
        coordinates = _matching_coordinates(jacobian, rank)
        distances = numpy.linalg.norm(
            targets[:, coordinates] - target[coordinates], axis=1)
        for start_index in numpy.argsort(distances)[:3]:
            point = _solve_signature(f_to, target, coordinates,
                                     samples_to[start_index].point)
            if point is None:
                continue
            try:
                distance = numpy.max(numpy.abs(signature_at(f_to, point) -
                                               target))
            except exception.NumericDomain:
                continue
            matched += 1
            worst = max(worst, float(distance))
            if distance > tol * (1 + scale):
                mismatch = True
            break
    return matched, worst, mismatch


def equivalence_necessary(f1, f2, n_samples, tol, seed):
    """
    Necessary conditions only: the verdict is never "equivalent". Signatures
    (I11, I03, D_u^i I11, D_v^i I11) of both equations are compared by rank
    and, through matching along the signature, pointwise.
    """
    samples1 = signature(f1, n_samples, seed)
    samples2 = signature(f2, n_samples, seed)
    rank1 = signature_rank(f1, samples1)
    rank2 = signature_rank(f2, samples2)
    report = dict(
        f1=str(f1),
        f2=str(f2),
        samples=n_samples,
        seed=seed,
        tol=tol,
        rank1=rank1,
        rank2=rank2)
    if rank1 != rank2:
        return EquivalenceReport(
            verdict=INEQUIVALENT,
            message="signature ranks differ (%d != %d)" % (rank1, rank2),
            **report)

    if rank1 == 0:
        first = numpy.array(samples1[0].values)
        second = numpy.array(samples2[0].values)
        distance = float(numpy.max(numpy.abs(first - second)))
        scale = float(max(numpy.max(numpy.abs(first)), numpy.max(
            numpy.abs(second))))
        verdict = INEQUIVALENT if distance > tol * (1 + scale) \
            else CONSISTENT
        return EquivalenceReport(
            verdict=verdict,
            matched=n_samples,
            max_distance=distance,
            message="constant signatures",
            **report)

    matched, worst, mismatch = 0, 0.0, False
    for f_from, s_from, f_to, s_to in ((f1, samples1, f2, samples2),
                                       (f2, samples2, f1, samples1)):
        count, distance, found = _match_direction(f_from, s_from, f_to, s_to,
                                                  rank1, tol)
        matched += count
        worst = max(worst, distance)
        mismatch = mismatch or found
    if mismatch:
        verdict = INEQUIVALENT
        message = "signature values differ at matched points"
    elif matched:
        verdict = CONSISTENT
        message = "signatures agree at %d matched points" % matched
    else:
        verdict = INCONCLUSIVE
        message = "no signature point could be matched"
    return EquivalenceReport(
        verdict=verdict,
        matched=matched,
        max_distance=worst,
        message=message,
        **report)


#
# Functional independence
#


def _as_invariant_expr(item):
    if isinstance(item, ist.BasisElement):
        return item.closed_form()
    if isinstance(item, mf.Invariant):
        return item.expr
    return js.as_expr(item)


@memoized
def _jacobian_functions(exprs):
    order = max([sk.jet_order(e) for e in exprs] + [0])
    return js.jacobian_entries(exprs, order), order


def independence_rank(invariants, f, n_points, seed):
    """
    Largest numeric rank of the Jacobian of the invariants with respect to
    the jet coordinates over sampled regular points of f.
    """
    exprs = tuple(_as_invariant_expr(item) for item in invariants)
    entries, order = _jacobian_functions(exprs)
    rank = 0
    for k in range(n_points):
        rng = sample_stream(seed, k)
        point = regular_point(f, rng)
        try:
            values = _point_values(jets_at(f, point, order), point)
            matrix = [[sk.eval_numeric(e, values) for e in row]
                      for row in entries]
        except exception.NumericDomain:
            continue
        rank = max(rank, numeric_rank(matrix))
    return rank


def rank_report(invariants, f, n_points, seed):
    labels = [
        item.label() if isinstance(item, ist.BasisElement) else str(item)
        for item in invariants
    ]
    return RankReport(
        f=str(f),
        invariants=labels,
        points=n_points,
        seed=seed,
        rank=independence_rank(invariants, f, n_points, seed))


#
# Images of nonlinearities
#


def transformed_nonlinearity(f, g):
    """
    f~(u~, v~) for an exact element with affine phi, written over the
    symbols u and v.
    """
    if g.mode != ga.SYMBOLIC or g.is_formal or g.phi.degree != 1:
        raise ValueError("An exact element with affine phi is required")
    a0, a1 = g.phi.coeffs
    u_old = g.phi.anchor + (sk.U - a0) / a1
    v_old = g.C1 * sk.V / a1
    f_old = sympy.sympify(f).xreplace({sk.U: u_old, sk.V: v_old})
    return (a1 * f_old - g.C2 * a1 * v_old) / g.C1**2
