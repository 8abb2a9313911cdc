"""FastAPI application exposing the operation registry and the theorem lab."""
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from arasonlab import __version__
from arasonlab.config import config
from arasonlab.utils.logger import setup_logger

app = FastAPI(
    title="Arason Invariant Lab API",
    version=f"{__version__} ({config.get('api', {}).get('version', 'v1')})",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

from .routes import api_router  # noqa: E402

app.include_router(api_router)

route_logger = setup_logger('routes')
for route in app.routes:
    if hasattr(route, 'methods'):
        route_logger.info(f"{list(route.methods)}  {route.path}")
