from typing import Any, Dict

from fastapi import APIRouter, Body
from fastapi.responses import JSONResponse

from arasonlab import __version__
from arasonlab.commands import GROUPS, OPERATIONS, execute
from arasonlab.exceptions import PreconditionError, TheoremViolation, WitnessNotFoundError
from arasonlab.services.lab import CHECKS, CheckRunner, GenConfig, replay
from arasonlab.utils.logger import setup_logger
from arasonlab.utils.timing import timed

api_router = APIRouter(prefix='/api/v1')

logger = setup_logger('api_routes')


def _error(message: str, status_code: int, **extra) -> JSONResponse:
    return JSONResponse({'status': 'error', 'message': message, **extra}, status_code=status_code)


@api_router.get('/health')
def health():
    """Health check with the package version and the registered checks."""
    return JSONResponse({'status': 'ok', 'version': __version__, 'checks': sorted(CHECKS)})


@api_router.post('/check/{name}')
def run_check_endpoint(name: str, payload: Dict[str, Any] = Body(default={})):
    """Run one registered law (or ``all``).

    Body fields are optional: seed, trials, height_bound, delta_pool, timing, exhaustive.
    """
    if name != 'all' and name not in CHECKS:
        return _error(f"unknown check '{name}'", 404)
    try:
        cfg = GenConfig.from_defaults(
            seed=payload.get('seed'),
            trials=payload.get('trials'),
            height_bound=payload.get('height_bound'),
            delta_pool=payload.get('delta_pool'),
        )
        result = CheckRunner(cfg, timing=bool(payload.get('timing')),
                             exhaustive=bool(payload.get('exhaustive'))).run([name])
        return JSONResponse(result)
    except ValueError as ve:
        return _error(str(ve), 400)
    except Exception as e:
        logger.error(f"An unhandled exception occurred in /check/{name}: {e}", exc_info=True)
        return _error('An internal server error occurred.', 500, details=str(e))


@api_router.post('/check/{name}/replay')
def replay_endpoint(name: str, payload: Dict[str, Any] = Body(...)):
    """Re-run one law on a serialized instance: ``{"instance": {...}}``."""
    if name not in CHECKS:
        return _error(f"unknown check '{name}'", 404)
    if 'instance' not in payload:
        return _error("body must contain 'instance'", 400)
    result = replay(name, payload['instance'])
    return JSONResponse(result, status_code=200 if result['status'] == 'pass' else 422)


@api_router.post('/{group}/{op}')
def operation_endpoint(group: str, op: str, payload: Dict[str, Any] = Body(...)):
    """Run a registered operation on ``{"args": [...]}`` (same arguments as the CLI)."""
    if group not in GROUPS or (group, op) not in OPERATIONS:
        return _error(f"unknown operation '{group} {op}'", 404)
    args = payload.get('args')
    if not isinstance(args, list):
        return _error("body must contain a list 'args'", 400)
    try:
        result = timed(execute, group, op, args) if payload.get('timing') else execute(group, op, args)
        return JSONResponse(result)
    except PreconditionError as pe:
        return JSONResponse(pe.to_dict(), status_code=400)
    except ValueError as ve:
        return _error(str(ve), 400)
    except (TheoremViolation, WitnessNotFoundError) as e:
        logger.error(f"{group} {op} failed an internal consistency check: {e}")
        return _error(str(e), 500, details=getattr(e, 'details', {}))
    except Exception as e:
        logger.error(f"An unhandled exception occurred in /{group}/{op}: {e}", exc_info=True)
        return _error('An internal server error occurred.', 500, details=str(e))
