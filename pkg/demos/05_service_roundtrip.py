"""Exercise the HTTP service in-process: health, erase, error handling.

Uses the test client so no port is bound; `texterase serve` runs the same
app under uvicorn. Run 03_train_tiny.py first for the checkpoint.
"""

import base64
import io
import pathlib

import numpy as np
from PIL import Image
from fastapi.testclient import TestClient

from texterase.data import SynthConfig, generate_sample
from texterase.service import create_app

out = pathlib.Path(__file__).parent / "out"
ckpt = out / "tiny.ckpt"
if not ckpt.exists():
    raise SystemExit("run 03_train_tiny.py first")


def to_b64(arr, mode="RGB"):
    buf = io.BytesIO()
    Image.fromarray(np.clip(np.rint(arr * 255), 0, 255).astype(np.uint8),
                    mode=mode).save(buf, format="PNG")
    return base64.b64encode(buf.getvalue()).decode()


sample = generate_sample(SynthConfig(image_size=32, glyph_scale_range=(8, 12),
                                     strings_per_image=(1, 1), seed=5), 0)

with TestClient(create_app(str(ckpt))) as client:
    health = client.get("/api/v1/health").json()
    print(f"health: {health['status']}, checkpoint {health['checkpoint_id']}")

    poly = [[float(x), float(y)] for x, y in sample.boxes[0].vertices]
    r = client.post("/api/v1/erase", json={
        "image": to_b64(sample.input),
        "polygons": [poly],
        "options": {"return_intermediates": True}})
    body = r.json()
    print(f"erase: {r.status_code} in {body['timing_ms']:.0f} ms, "
          f"intermediates: {sorted(body['intermediates'])}")

    png = base64.b64decode(body["composite_fine"])
    (out / "service_composite.png").write_bytes(png)
    print(f"decoded composite is {Image.open(io.BytesIO(png)).size}")

    # the wire contract rejects ambiguous requests with a field-level message
    bad = client.post("/api/v1/erase", json={
        "image": to_b64(sample.input), "all": True, "polygons": [poly]})
    print(f"conflicting selectors -> {bad.status_code}: {bad.json()['detail']}")
