"""HTTP front end for the decision pipeline."""
import asyncio
from dataclasses import replace
from functools import partial
from logging import getLogger
from typing import Any, Callable, Dict, Optional

from aiohttp import web

from .config import DecisionConfig
from .decision import decide
from .error import ParseError, QuasiminError
from .parser import parse
from .quasiform import decompose
from .types import NormalVector

_LOGGER = getLogger(__name__)

CONFIG_KEY = "quasimin.config"

_DECISION_FIELDS = ("depth", "max_nu", "max_order")


def _error(
    message: str, position: Optional[int] = None, status: int = 400
) -> web.Response:
    return web.json_response({"error": message, "position": position}, status=status)


def _request_config(base: DecisionConfig, body: Dict[str, Any]) -> DecisionConfig:
    overrides = {key: body[key] for key in _DECISION_FIELDS if key in body}
    return replace(base, **overrides) if overrides else base


async def _read_body(request: web.Request) -> Dict[str, Any]:
    try:
        body = await request.json()
    except ValueError:
        raise ValueError("Request body is not JSON")
    if not isinstance(body, dict) or not isinstance(body.get("expr"), str):
        raise ValueError('Request body needs an "expr" string')
    return body


async def _in_executor(func: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(None, func)


def _check(body: Dict[str, Any], config: DecisionConfig) -> Dict[str, Any]:
    p = parse(body["expr"])
    return dict(decide(p, _request_config(config, body)))


def _decompose(body: Dict[str, Any]) -> Dict[str, Any]:
    p = parse(body["expr"])
    normal = NormalVector(body.get("a1"), body.get("a2"))
    dec = decompose(p, normal)
    return dict(dec, levels=dec.levels)


async def handle_check(request: web.Request) -> web.Response:
    """POST /check: the verdict for one polynomial."""
    config: DecisionConfig = request.app[CONFIG_KEY]
    try:
        body = await _read_body(request)
        result = await _in_executor(partial(_check, body, config))
    except ParseError as e:
        return _error(str(e), e.position)
    except (QuasiminError, ValueError, TypeError) as e:
        return _error(str(e))
    except RuntimeError as e:
        _LOGGER.exception("Request to %s failed", request.path)
        return _error(str(e), status=500)
    _LOGGER.info("Checked %s: %s", body["expr"], result["status"])
    return web.json_response(result)


async def handle_decompose(request: web.Request) -> web.Response:
    """POST /decompose: forms, levels and characteristic polynomials."""
    try:
        body = await _read_body(request)
        result = await _in_executor(partial(_decompose, body))
    except ParseError as e:
        return _error(str(e), e.position)
    except (QuasiminError, ValueError, TypeError) as e:
        return _error(str(e))
    except RuntimeError as e:
        _LOGGER.exception("Request to %s failed", request.path)
        return _error(str(e), status=500)
    return web.json_response(result)


def create_app(config: Optional[DecisionConfig] = None) -> web.Application:
    app = web.Application()
    app[CONFIG_KEY] = config or DecisionConfig()
    app.add_routes(
        [
            web.post("/check", handle_check),
            web.post("/decompose", handle_decompose),
        ]
    )
    return app


def run_server(host: str, port: int, config: Optional[DecisionConfig] = None) -> None:
    """Serve until interrupted."""
    _LOGGER.info("Serving on http://%s:%d", host, port)
    web.run_app(create_app(config), host=host, port=port, print=None)
