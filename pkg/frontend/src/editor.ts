// DOM wiring for the mask editor. All state transitions live in state.ts;
// this file renders state and forwards events.
//
// Pixel data is never touched client-side: the working image and every
// result stay base64 PNG strings straight off the wire, and the download
// button writes the service's composite_fine bytes verbatim.

import { getHealth, postErase, ServiceError } from './api.js';
import { clientToImage } from './canvas.js';
import { base64ToBytes, pngDimensions } from './png.js';
import * as st from './state.js';
import { buildEraseRequest, EraseResponseWire, Point, Region } from './wire.js';

const BASE_URL = '';

let state = st.initialState();
let lastResponse: EraseResponseWire | null = null;
let rectStart: Point | null = null;
let showMaskOverlay = false;

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

const canvas = $('editor-canvas') as HTMLCanvasElement;
const resultCanvas = $('result-canvas') as HTMLCanvasElement;
const banner = $('banner');
const fileInput = $('file-input') as HTMLInputElement;
const modeSelect = $('mode-select') as HTMLSelectElement;
const submitBtn = $('submit-btn') as HTMLButtonElement;
const commitBtn = $('commit-btn') as HTMLButtonElement;
const clearBtn = $('clear-btn') as HTMLButtonElement;
const undoBtn = $('undo-btn') as HTMLButtonElement;
const iterateBtn = $('iterate-btn') as HTMLButtonElement;
const overlayToggle = $('overlay-toggle') as HTMLInputElement;
const downloadLink = $('download-link') as HTMLAnchorElement;
const statusLine = $('status-line');

function setState(next: st.EditorState): void {
  state = next;
  render();
}

function drawImageFromB64(target: HTMLCanvasElement, b64: string,
                          after?: (ctx: CanvasRenderingContext2D) => void): void {
  const img = new Image();
  img.onload = () => {
    // native resolution: the canvas buffer always matches the PNG header,
    // CSS may scale the element but never the pixels
    target.width = img.naturalWidth;
    target.height = img.naturalHeight;
    const ctx = target.getContext('2d')!;
    ctx.drawImage(img, 0, 0);
    if (after) after(ctx);
  };
  img.src = `data:image/png;base64,${b64}`;
}

function drawRegions(ctx: CanvasRenderingContext2D): void {
  ctx.lineWidth = Math.max(1, state.imageWidth / 256);
  ctx.strokeStyle = '#00e0ff';
  for (const poly of state.committedPolygons) {
    ctx.beginPath();
    poly.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
    ctx.closePath();
    ctx.stroke();
  }
  ctx.strokeStyle = '#ffb000';
  if (state.polygonDraft.length > 0) {
    ctx.beginPath();
    state.polygonDraft.forEach(([x, y], i) =>
      i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y));
    ctx.stroke();
    for (const [x, y] of state.polygonDraft) {
      ctx.fillStyle = '#ffb000';
      ctx.fillRect(x - 2, y - 2, 4, 4);
    }
  }
}

function render(): void {
  banner.textContent = state.banner ?? '';
  banner.style.display = state.banner ? 'block' : 'none';
  submitBtn.disabled =
    state.pending ||
    state.currentImage === null ||
    (state.mode !== 'erase-all' && state.committedPolygons.length === 0);
  undoBtn.disabled = state.history.length === 0;
  iterateBtn.disabled = lastResponse === null;
  statusLine.textContent =
    `${state.committedPolygons.length} region(s), history ${state.history.length}` +
    (state.pending ? ', erasing...' : '');

  if (state.currentImage !== null) {
    drawImageFromB64(canvas, state.currentImage, drawRegions);
  }
  if (lastResponse !== null) {
    const shown =
      showMaskOverlay && lastResponse.intermediates
        ? lastResponse.intermediates.refined_mask
        : lastResponse.composite_fine;
    drawImageFromB64(resultCanvas, shown);
  }
}

fileInput.onchange = () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  const reader = new FileReader();
  reader.onload = () => {
    const b64 = (reader.result as string).split(',', 2)[1];
    const { width, height } = pngDimensions(base64ToBytes(b64));
    lastResponse = null;
    setState(st.loadImage(state, b64, width, height));
  };
  reader.readAsDataURL(file);
};

modeSelect.onchange = () => {
  rectStart = null;
  setState({ ...state, mode: modeSelect.value as st.Mode, polygonDraft: [] });
};

canvas.onclick = (e) => {
  if (state.currentImage === null) return;
  const r = canvas.getBoundingClientRect();
  const point = clientToImage(e.clientX, e.clientY,
    { left: r.left, top: r.top, width: r.width, height: r.height },
    state.imageWidth, state.imageHeight);
  if (state.mode === 'polygon') {
    setState(st.addDraftVertex(state, point));
  } else if (state.mode === 'rectangle') {
    if (rectStart === null) {
      rectStart = point;
      setState({ ...state, banner: 'click the opposite corner' });
    } else {
      const start = rectStart;
      rectStart = null;
      setState(st.commitRectangle(state, start, point));
    }
  }
};

commitBtn.onclick = () => setState(st.commitPolygon(state));
clearBtn.onclick = () => setState(st.clearRegions(state));
undoBtn.onclick = () => {
  lastResponse = null;
  setState(st.undo(state));
};
iterateBtn.onclick = () => {
  if (lastResponse !== null) {
    setState(st.iterate(state, lastResponse.composite_fine));
  }
};
overlayToggle.onchange = () => {
  showMaskOverlay = overlayToggle.checked;
  render();
};

submitBtn.onclick = async () => {
  if (state.currentImage === null || state.pending) return;
  const region: Region =
    state.mode === 'erase-all'
      ? { kind: 'all' }
      : { kind: 'polygons', polygons: state.committedPolygons };
  const request = buildEraseRequest(state.currentImage, region, {
    return_intermediates: true,
  });
  setState({ ...state, pending: true, banner: null });
  try {
    const response = await postErase(BASE_URL, request);
    lastResponse = response;
    const bytes = base64ToBytes(response.composite_fine);
    downloadLink.href = URL.createObjectURL(new Blob([bytes as BlobPart],
                                                     { type: 'image/png' }));
    downloadLink.download = 'composite.png';
    downloadLink.style.display = 'inline';
    setState({ ...state, pending: false });
  } catch (err) {
    const detail =
      err instanceof ServiceError ? err.detail : `network failure: ${err}`;
    setState({ ...state, pending: false, banner: detail });
  }
};

getHealth(BASE_URL)
  .then((h) => {
    statusLine.textContent = `model ${h.checkpoint_id} ready`;
  })
  .catch(() => {
    statusLine.textContent = 'service unreachable';
  });

render();
