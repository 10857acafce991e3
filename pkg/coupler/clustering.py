# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from typing import Callable, Optional, Sequence

import numpy as np
from sklearn.cluster import DBSCAN

from share import OutOfRangeException, SolverException, shared_logger
from systems import LengthAssignment

from .family import CouplerFamily
from .sampling import SampleRecord

NOISE: int = -1

_default_eps: float = 0.15
_default_min_samples: int = 2


CountCallable = Callable[[LengthAssignment], int]


def cluster_candidates(
    records: Sequence[SampleRecord],
    family: Optional[CouplerFamily] = None,
    count: Optional[CountCallable] = None,
    eps: float = _default_eps,
    min_samples: int = _default_min_samples,
) -> list[SampleRecord]:
    """
    One representative per cluster of the records reaching the maximum real count.
    The representative is the cluster centroid when it keeps the maximum count, otherwise the member closest to it.
    Points in no cluster stand for themselves
    """

    usable = [record for record in records if not record.failed]
    if not usable:
        return []

    best = max(record.real_count for record in usable)
    top = [record for record in usable if record.real_count == best]
    points = np.array([[record.phi, record.theta] for record in top])
    labels = DBSCAN(eps=eps, min_samples=min_samples).fit_predict(points)

    representatives: list[SampleRecord] = [record for record, label in zip(top, labels) if label == NOISE]
    for label in sorted(set(labels.tolist()) - {NOISE}):
        members = [record for record, member_label in zip(top, labels) if member_label == label]
        centroid = np.array([[record.phi, record.theta] for record in members]).mean(axis=0)

        representative: Optional[SampleRecord] = None
        if family is not None and count is not None:
            representative = _centroid_record(family, count, float(centroid[0]), float(centroid[1]), best)

        if representative is None:
            distances = [np.hypot(record.phi - centroid[0], record.theta - centroid[1]) for record in members]
            representative = members[int(np.argmin(distances))]

        representatives.append(representative)

    shared_logger.debug("clusters", extra={"max_real_count": best, "representatives": len(representatives)})

    return sorted(representatives, key=lambda record: (record.phi, record.theta))


def _centroid_record(
    family: CouplerFamily, count: CountCallable, phi: float, theta: float, best: int
) -> Optional[SampleRecord]:
    try:
        lengths, t, r = family.lengths_from_phi_theta(phi, theta)
        real_count = count(lengths)
    except (OutOfRangeException, SolverException):
        return None

    if real_count != best:
        return None

    return SampleRecord(family.subgraph, phi, theta, t, r, lengths, real_count, 0)
