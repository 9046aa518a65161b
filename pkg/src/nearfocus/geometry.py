"""Uniform planar array layouts and near-field / far-field region classification."""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError, SingularGeometryError

SPEED_OF_LIGHT = 299_792_458.0
"Vacuum speed of light in m/s."

REACTIVE_NEAR_FIELD = "reactive-near-field"
RADIATING_NEAR_FIELD = "radiating-near-field"
FAR_FIELD = "far-field"

# plane name -> index of the coordinate that is constant across the array
_PLANE_NORMAL = {"xy": 2, "xz": 1, "yz": 0}


@dataclass(frozen=True)
class Carrier:
    """Carrier wave; the wavelength is derived from the frequency."""

    frequency_hz: float

    def __post_init__(self):
        f = self.frequency_hz
        if not (isinstance(f, (int, float)) and math.isfinite(f) and f > 0):
            raise InvalidParameterError(f"carrier frequency must be finite and positive, got {f!r}")
        object.__setattr__(self, "frequency_hz", float(f))

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT / self.frequency_hz


def max_pairwise_distance(points: np.ndarray) -> float:
    """Largest Euclidean distance between any two rows of ``points`` (brute force, chunked)."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise InvalidParameterError(f"expected an (N, 3) array of positions, got shape {pts.shape}")
    best = 0.0
    for start in range(0, len(pts), 512):
        blk = pts[start : start + 512]
        d2 = ((blk[:, None, :] - pts[None, :, :]) ** 2).sum(axis=-1)
        best = max(best, float(d2.max()))
    return math.sqrt(best)


@dataclass(frozen=True)
class ArrayGeometry:
    """Positions of the radiating elements of an antenna array plus its carrier.

    ``elements`` is an (N, 3) array in meters, row-major in the grid axes for
    arrays built by :func:`build_upa`. ``aperture_m`` is always the exact
    maximum pairwise element distance. ``plane`` names the coordinate plane
    the layout occupies ("xy", "xz", "yz") or is None for free-form layouts.
    """

    elements: np.ndarray
    carrier: Carrier
    plane: str | None = "xy"
    aperture_m: float = field(init=False)

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.elements, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) == 0:
            raise InvalidParameterError(f"elements must be a non-empty (N, 3) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise InvalidParameterError("element positions must be finite")
        if self.plane is not None:
            if self.plane not in _PLANE_NORMAL:
                raise InvalidParameterError(f"unknown plane {self.plane!r}; use one of {sorted(_PLANE_NORMAL)} or None")
            normal = pts[:, _PLANE_NORMAL[self.plane]]
            if np.any(normal != normal[0]):
                raise InvalidParameterError(f"element positions do not all lie in one {self.plane!r} plane")
        pts.flags.writeable = False
        object.__setattr__(self, "elements", pts)
        object.__setattr__(self, "aperture_m", max_pairwise_distance(pts))

    @property
    def num_elements(self) -> int:
        return len(self.elements)

    @property
    def center(self) -> np.ndarray:
        return self.elements.mean(axis=0)


@dataclass(frozen=True)
class RegionClass:
    """Field-region classification of one spatial point relative to an array."""

    label: str
    fraunhofer_distance_m: float
    reactive_bound_m: float


def build_upa(
    length_m: float,
    width_m: float,
    spacing_wavelengths: float,
    carrier: Carrier,
    center=(0.0, 0.0, 0.0),
) -> ArrayGeometry:
    """Build a uniform planar array in the xy-plane centered on ``center``.

    The grid pitch is ``spacing_wavelengths`` times the carrier wavelength and
    the element count per axis is the densest grid fitting the given side:
    floor(side / pitch) + 1. A zero-length side degenerates to a single row
    (or a single element when both sides are zero).

    Parameters
    ----------
    length_m, width_m : float
        Physical side lengths along x and y, in meters.
    spacing_wavelengths : float
        Element pitch in units of the carrier wavelength.
    carrier : Carrier
    center : sequence of 3 floats
        Geometric center of the grid, in meters.
    """
    for name, v in (("length_m", length_m), ("width_m", width_m)):
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v >= 0):
            raise InvalidParameterError(f"{name} must be finite and non-negative, got {v!r}")
    if not (isinstance(spacing_wavelengths, (int, float)) and math.isfinite(spacing_wavelengths) and spacing_wavelengths > 0):
        raise InvalidParameterError(f"spacing must be finite and positive, got {spacing_wavelengths!r}")
    ctr = np.asarray(center, dtype=float)
    if ctr.shape != (3,) or not np.all(np.isfinite(ctr)):
        raise InvalidParameterError(f"center must be a finite 3D point, got {center!r}")

    pitch = spacing_wavelengths * carrier.wavelength_m
    # +1e-9 tolerates float error when a side is an exact multiple of the pitch
    n_x = int(math.floor(length_m / pitch + 1e-9)) + 1
    n_y = int(math.floor(width_m / pitch + 1e-9)) + 1
    xs = (np.arange(n_x) - (n_x - 1) / 2.0) * pitch + ctr[0]
    ys = (np.arange(n_y) - (n_y - 1) / 2.0) * pitch + ctr[1]
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    pts = np.column_stack([gx.ravel(), gy.ravel(), np.full(n_x * n_y, ctr[2])])
    return ArrayGeometry(elements=pts, carrier=carrier, plane="xy")


def fraunhofer_distance(aperture_m: float, carrier: Carrier) -> float:
    """Fraunhofer (Rayleigh) distance 2 D^2 / lambda for aperture D."""
    if not (isinstance(aperture_m, (int, float)) and math.isfinite(aperture_m) and aperture_m >= 0):
        raise InvalidParameterError(f"aperture must be finite and non-negative, got {aperture_m!r}")
    return 2.0 * aperture_m * aperture_m / carrier.wavelength_m


def reactive_bound(aperture_m: float, carrier: Carrier) -> float:
    """Standard reactive near-field boundary 0.62 sqrt(D^3 / lambda)."""
    if not (isinstance(aperture_m, (int, float)) and math.isfinite(aperture_m) and aperture_m >= 0):
        raise InvalidParameterError(f"aperture must be finite and non-negative, got {aperture_m!r}")
    return 0.62 * math.sqrt(aperture_m ** 3 / carrier.wavelength_m)


def _point_distances(array: ArrayGeometry, point) -> tuple[np.ndarray, np.ndarray]:
    pt = np.asarray(point, dtype=float)
    if pt.shape != (3,) or not np.all(np.isfinite(pt)):
        raise InvalidParameterError(f"point must be a finite 3D position, got {point!r}")
    d = np.sqrt(((pt - array.elements) ** 2).sum(axis=1))
    if np.any(d == 0.0):
        raise SingularGeometryError(f"point {pt.tolist()} coincides with an array element")
    return pt, d


def classify_point(array: ArrayGeometry, point) -> RegionClass:
    """Classify ``point`` as reactive / radiating near-field or far-field.

    The distance is measured from the array center; the far boundary is the
    Fraunhofer distance of the array aperture and the reactive boundary is
    0.62 sqrt(D^3 / lambda).
    """
    pt, _ = _point_distances(array, point)
    d_f = fraunhofer_distance(array.aperture_m, array.carrier)
    r_b = reactive_bound(array.aperture_m, array.carrier)
    dist = float(np.linalg.norm(pt - array.center))
    if dist > d_f:
        label = FAR_FIELD
    elif dist < r_b:
        label = REACTIVE_NEAR_FIELD
    else:
        label = RADIATING_NEAR_FIELD
    return RegionClass(label=label, fraunhofer_distance_m=d_f, reactive_bound_m=r_b)


def max_phase_deviation(array: ArrayGeometry, point) -> float:
    """Worst-case phase error (radians) of the plane-wave approximation at ``point``.

    Compares the exact element-to-point distances against the first-order
    planar approximation taken from the array center and converts the largest
    gap to phase at the carrier wavelength. At the Fraunhofer distance of a
    center-symmetric array this evaluates to ~pi/8 (22.5 degrees).
    """
    pt, d = _point_distances(array, point)
    ctr = array.center
    r = pt - ctr
    dist = float(np.linalg.norm(r))
    if dist == 0.0:
        raise SingularGeometryError("point coincides with the array center")
    u = r / dist
    d_planar = dist - (array.elements - ctr) @ u
    lam = array.carrier.wavelength_m
    return float((2.0 * np.pi / lam) * np.abs(d - d_planar).max())
