import logging
from typing import Callable, List, Optional, TypeVar

from fastapi import APIRouter, Depends, HTTPException, Query
from pydantic import ValidationError

from .cli import bijection_result, largest_result, oracle_budget
from .config import Settings, get_settings
from .counting import average_size_formula, count_cores_by_lattice
from .errors import PreconditionError, SimulcoreError
from .oracle import EnumerationBudget, enumerate_cores, oracle_stats
from .partitions import CoreSpec, Partition
from .schemas import (
    AverageResult,
    BijectionRequest,
    BijectionResult,
    CountResult,
    EnumerateResult,
    LargestResult,
    as_decimal,
    as_rational,
)

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/cores", tags=["cores"])

T = TypeVar("T")


def settings_dependency() -> Settings:
    return get_settings(default_log_level="INFO")


def _spec(moduli: str) -> CoreSpec:
    try:
        values = [int(token) for token in moduli.split(",") if token.strip()]
    except ValueError:
        raise PreconditionError("moduli must be comma-separated integers", f"got {moduli!r}")
    return CoreSpec(moduli=tuple(values))


def _guarded(what: str, compute: Callable[[], T]) -> T:
    """Map domain errors to 422 and anything unexpected to 500."""
    try:
        return compute()
    except (SimulcoreError, ValidationError) as e:
        raise HTTPException(status_code=422, detail=str(e))
    except Exception as e:
        logger.error(f"Error computing {what}: {e}")
        raise HTTPException(status_code=500, detail=f"Error computing {what}: {str(e)}")


def _budget(spec: CoreSpec, max_size: Optional[int], settings: Settings) -> EnumerationBudget:
    return oracle_budget(spec, max_size, settings.max_oracle_size)


@router.get("/count", response_model=CountResult)
def count_cores(
    moduli: str = Query(..., description="Comma-separated moduli, e.g. 3,4,5"),
    method: str = Query("oracle", pattern="^(oracle|lattice)$"),
    settings: Settings = Depends(settings_dependency),
):
    """
    Count the simultaneous cores of a set of moduli.
    """
    def compute() -> CountResult:
        spec = _spec(moduli)
        if method == "lattice":
            count = count_cores_by_lattice(spec, workers=settings.threads)
        else:
            count = len(enumerate_cores(spec, _budget(spec, None, settings), workers=settings.threads))
        return CountResult(moduli=list(spec.moduli), method=method, count=as_decimal(count))

    return _guarded("count", compute)


@router.get("/enumerate", response_model=EnumerateResult)
def list_cores(
    moduli: str = Query(..., description="Comma-separated moduli"),
    max_size: Optional[int] = Query(None, ge=0, description="Explicit size bound"),
    settings: Settings = Depends(settings_dependency),
):
    """
    List the simultaneous cores, smallest first.
    """
    def compute() -> EnumerateResult:
        spec = _spec(moduli)
        budget = _budget(spec, max_size, settings)
        partitions: List[Partition] = enumerate_cores(spec, budget, workers=settings.threads)
        return EnumerateResult(
            moduli=list(spec.moduli),
            max_size=budget.max_size,
            justification=budget.justification,
            partitions=partitions,
        )

    return _guarded("enumeration", compute)


@router.get("/largest", response_model=LargestResult, response_model_exclude_none=True)
def largest_core(
    s: Optional[int] = Query(None, description="s for the (s, s+1, s+2) family"),
    selfconj: bool = Query(False, description="Self-conjugate cores only"),
    a: Optional[int] = Query(None),
    b: Optional[int] = Query(None),
):
    return _guarded("largest size", lambda: largest_result(s, selfconj, a, b))


@router.get("/average", response_model=AverageResult, response_model_exclude_none=True)
def average_size(
    a: int = Query(...),
    b: int = Query(...),
    check: bool = Query(False, description="Also average over the enumerated cores"),
    settings: Settings = Depends(settings_dependency),
):
    def compute() -> AverageResult:
        mean = average_size_formula(a, b)
        result = AverageResult(a=a, b=b, mean=as_rational(mean))
        if check:
            spec = CoreSpec.of(a, b)
            stats = oracle_stats(spec, _budget(spec, None, settings), workers=settings.threads)
            result.oracle_mean = as_rational(stats.mean)
            result.match = stats.mean == mean
        return result

    return _guarded("average size", compute)


@router.post("/biject", response_model=BijectionResult, response_model_exclude_none=True)
def biject(request: BijectionRequest):
    """
    Abacus coordinates of an a-core given as a partition or as c-coordinates.
    """
    def compute() -> BijectionResult:
        partition = Partition(tuple(request.partition)) if request.partition is not None else None
        return bijection_result(request.a, partition, request.c, request.b0)

    return _guarded("bijection", compute)
