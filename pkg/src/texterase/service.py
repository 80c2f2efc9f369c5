"""HTTP facade over erase: POST /api/v1/erase and GET /api/v1/health.

Wire format is JSON with base64-encoded PNGs. Exactly one of polygons,
mask, all selects the removal region. Non-200 responses always carry a
JSON body {"error", "detail"}.
"""

import base64
import binascii
import contextlib
import hashlib
import io
import json
import threading
import time
import traceback
import uuid

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from PIL import Image, UnidentifiedImageError

from .checkpoints import load_checkpoint
from .inference import EraseRequest, erase
from .masks import PolygonBox
from .networks import Generator

MAX_IMAGE_BYTES = 16 * 2 ** 20  # decoded PNG payload cap per image


class ApiError(Exception):
    def __init__(self, status, error, detail):
        super().__init__(detail)
        self.status = status
        self.error = error
        self.detail = detail


def _error_response(status, error, detail):
    return JSONResponse(status_code=status, content={"error": error, "detail": detail})


def _decode_b64(field, text):
    if not isinstance(text, str):
        raise ApiError(400, "invalid request", f"{field}: expected a base64 string")
    try:
        raw = base64.b64decode(text, validate=True)
    except (binascii.Error, ValueError):
        raise ApiError(400, "invalid request", f"{field}: invalid base64")
    if len(raw) > MAX_IMAGE_BYTES:
        raise ApiError(413, "payload too large",
                       f"{field}: decoded size {len(raw)} exceeds limit {MAX_IMAGE_BYTES}")
    return raw


def _decode_image(field, raw, mode):
    try:
        with Image.open(io.BytesIO(raw)) as im:
            arr = np.asarray(im.convert(mode), dtype=np.float32)
    except (UnidentifiedImageError, OSError, ValueError):
        raise ApiError(422, "undecodable image", f"{field}: could not decode PNG data")
    return arr / 255.0


def _encode_image(array):
    arr = np.clip(np.rint(np.asarray(array) * 255.0), 0, 255).astype(np.uint8)
    mode = "L" if arr.ndim == 2 else "RGB"
    buf = io.BytesIO()
    Image.fromarray(arr, mode=mode).save(buf, format="PNG")
    return base64.b64encode(buf.getvalue()).decode("ascii")


def _parse_polygons(value):
    if not isinstance(value, list) or not value:
        raise ApiError(400, "invalid request", "polygons: expected a non-empty list of point lists")
    boxes = []
    for i, poly in enumerate(value):
        if not isinstance(poly, list) or len(poly) < 3:
            raise ApiError(400, "invalid request", f"polygons[{i}]: need at least 3 points")
        pts = []
        for j, pt in enumerate(poly):
            if (not isinstance(pt, (list, tuple)) or len(pt) != 2
                    or not all(isinstance(v, (int, float)) for v in pt)):
                raise ApiError(400, "invalid request",
                               f"polygons[{i}][{j}]: expected an [x, y] number pair")
            pts.append([float(pt[0]), float(pt[1])])
        boxes.append(PolygonBox(vertices=np.asarray(pts, dtype=np.float64)))
    return boxes


_OPTION_CHECKS = {
    "dilation_radius": lambda v: isinstance(v, int) and not isinstance(v, bool) and v >= 0,
    "mask_threshold": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool)
                                and 0.0 < float(v) < 1.0,
    "return_intermediates": lambda v: isinstance(v, bool),
}


def _parse_options(value):
    opts = {"dilation_radius": 7, "mask_threshold": 0.5, "return_intermediates": False}
    if value is None:
        return opts
    if not isinstance(value, dict):
        raise ApiError(400, "invalid request", "options: expected an object")
    for key, val in value.items():
        check = _OPTION_CHECKS.get(key)
        if check is None:
            raise ApiError(400, "invalid request", f"options.{key}: unknown option")
        if not check(val):
            raise ApiError(400, "invalid request", f"options.{key}: invalid value {val!r}")
        opts[key] = val
    return opts


def parse_erase_request(body):
    """Raw JSON dict -> EraseRequest, raising ApiError with field-level detail."""
    if not isinstance(body, dict):
        raise ApiError(400, "invalid request", "body: expected a JSON object")
    unknown = set(body) - {"image", "polygons", "mask", "all", "options"}
    if unknown:
        raise ApiError(400, "invalid request", f"unknown field: {sorted(unknown)[0]}")
    if "image" not in body:
        raise ApiError(400, "invalid request", "image: required")
    image = _decode_image("image", _decode_b64("image", body["image"]), "RGB")

    selectors = [name for name in ("polygons", "mask", "all")
                 if body.get(name) not in (None, False)]
    if len(selectors) != 1:
        got = ", ".join(selectors) if selectors else "none"
        raise ApiError(400, "invalid request",
                       f"exactly one of polygons, mask, all must be set (got {got})")
    opts = _parse_options(body.get("options"))

    polygons = mask = None
    erase_all = False
    if selectors[0] == "polygons":
        polygons = _parse_polygons(body["polygons"])
    elif selectors[0] == "mask":
        mask = _decode_image("mask", _decode_b64("mask", body["mask"]), "L")
        if mask.shape != image.shape[:2]:
            raise ApiError(400, "invalid request",
                           f"mask shape {mask.shape} does not match image "
                           f"{image.shape[:2]}")
    else:
        if body["all"] is not True:
            raise ApiError(400, "invalid request", "all: expected true")
        erase_all = True

    try:
        return EraseRequest(image=image, polygons=polygons, mask=mask, erase_all=erase_all,
                            dilation_radius=opts["dilation_radius"],
                            mask_threshold=float(opts["mask_threshold"]),
                            return_intermediates=opts["return_intermediates"])
    except ValueError as exc:
        raise ApiError(400, "invalid request", str(exc))


class _ModelBox:
    """Shared immutable model handle plus a gate that bounds concurrent forwards."""

    def __init__(self, checkpoint, concurrency_limit):
        self.checkpoint = checkpoint
        self.model = None
        self.checkpoint_id = None
        self.step = None
        self.started = time.monotonic()
        self._gate = threading.Semaphore(concurrency_limit)

    def load(self):
        if self.model is not None:
            return
        if isinstance(self.checkpoint, Generator):
            self.model = self.checkpoint.eval()
            self.checkpoint_id = "in-memory"
            self.step = 0
        else:
            digest = hashlib.sha256()
            with open(self.checkpoint, "rb") as fh:
                for chunk in iter(lambda: fh.read(1 << 20), b""):
                    digest.update(chunk)
            bundle = load_checkpoint(self.checkpoint)
            self.model = bundle["generator"].eval()
            self.checkpoint_id = digest.hexdigest()[:12]
            self.step = int(bundle["manifest"]["step"])

    def run(self, request):
        with self._gate:
            return erase(request, self.model)


def create_app(checkpoint, concurrency_limit=1, max_body_bytes=64 * 2 ** 20,
               static_dir=None):
    """Build the FastAPI app. The checkpoint loads during startup; until
    then both endpoints answer 503."""
    box = _ModelBox(checkpoint, concurrency_limit)

    @contextlib.asynccontextmanager
    async def _lifespan(app):
        box.load()
        yield

    app = FastAPI(title="texterase", docs_url=None, redoc_url=None, lifespan=_lifespan)
    app.state.box = box

    @app.get("/api/v1/health")
    def health():
        if box.model is None:
            return _error_response(503, "loading", "model checkpoint is still loading")
        return {"status": "ok", "checkpoint_id": box.checkpoint_id,
                "uptime_s": time.monotonic() - box.started}

    @app.post("/api/v1/erase")
    async def erase_endpoint(request: Request):
        if box.model is None:
            return _error_response(503, "loading", "model checkpoint is still loading")
        raw = await request.body()
        if len(raw) > max_body_bytes:
            return _error_response(413, "payload too large",
                                   f"body size {len(raw)} exceeds limit {max_body_bytes}")
        try:
            try:
                body = json.loads(raw)
            except ValueError:
                raise ApiError(400, "invalid request", "body: not valid JSON")
            req = parse_erase_request(body)
            t0 = time.perf_counter()
            result = box.run(req)
            timing_ms = (time.perf_counter() - t0) * 1000.0
        except ApiError as exc:
            return _error_response(exc.status, exc.error, exc.detail)
        except Exception:
            ref = uuid.uuid4().hex[:12]
            print(f"internal error {ref}\n{traceback.format_exc()}", flush=True)
            return _error_response(500, "internal error", f"reference {ref}")

        payload = {
            "composite_fine": _encode_image(result.composite_fine),
            "timing_ms": timing_ms,
            "model_info": {"checkpoint_id": box.checkpoint_id, "step": box.step},
        }
        if req.return_intermediates:
            payload["intermediates"] = {
                "refined_mask": _encode_image(result.refined_mask),
                "coarse": _encode_image(result.coarse),
                "coarse_composite": _encode_image(result.coarse_composite),
                "fine": _encode_image(result.fine),
            }
        return payload

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
