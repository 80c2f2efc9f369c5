// Editor state and the transitions the UI buttons map onto. Pure data in,
// new state out; the DOM layer never mutates these objects directly.

import { Point } from './wire.js';

export type Mode = 'polygon' | 'rectangle' | 'erase-all';

export const MAX_DRAFT_VERTICES = 64;
export const MAX_HISTORY = 20;

export interface HistoryEntry {
  image: string; // base64 PNG
  polygons: Point[][];
}

export interface EditorState {
  currentImage: string | null; // base64 PNG
  imageWidth: number;
  imageHeight: number;
  polygonDraft: Point[];
  committedPolygons: Point[][];
  mode: Mode;
  history: HistoryEntry[];
  banner: string | null;
  pending: boolean;
}

export function initialState(): EditorState {
  return {
    currentImage: null,
    imageWidth: 0,
    imageHeight: 0,
    polygonDraft: [],
    committedPolygons: [],
    mode: 'polygon',
    history: [],
    banner: null,
    pending: false,
  };
}

export function loadImage(
  state: EditorState,
  imageB64: string,
  width: number,
  height: number,
): EditorState {
  return {
    ...initialState(),
    mode: state.mode,
    currentImage: imageB64,
    imageWidth: width,
    imageHeight: height,
  };
}

export function addDraftVertex(state: EditorState, point: Point): EditorState {
  if (state.polygonDraft.length >= MAX_DRAFT_VERTICES) {
    return { ...state, banner: `draft is capped at ${MAX_DRAFT_VERTICES} vertices` };
  }
  const [x, y] = point;
  if (x < 0 || y < 0 || x > state.imageWidth || y > state.imageHeight) {
    return { ...state, banner: 'vertex outside the image' };
  }
  return { ...state, banner: null, polygonDraft: [...state.polygonDraft, point] };
}

// A committed polygon is a closed ring of at least 3 vertices; a short
// draft is rejected with a message and left intact for further clicks.
export function commitPolygon(state: EditorState): EditorState {
  if (state.polygonDraft.length < 3) {
    return { ...state, banner: 'a polygon needs at least 3 vertices' };
  }
  return {
    ...state,
    banner: null,
    polygonDraft: [],
    committedPolygons: [...state.committedPolygons, state.polygonDraft],
  };
}

// Rectangle mode: two corner clicks become a 4-vertex polygon.
export function commitRectangle(state: EditorState, a: Point, b: Point): EditorState {
  const x0 = Math.min(a[0], b[0]);
  const x1 = Math.max(a[0], b[0]);
  const y0 = Math.min(a[1], b[1]);
  const y1 = Math.max(a[1], b[1]);
  if (x1 - x0 < 1 || y1 - y0 < 1) {
    return { ...state, banner: 'rectangle is too small' };
  }
  const quad: Point[] = [[x0, y0], [x1, y0], [x1, y1], [x0, y1]];
  return {
    ...state,
    banner: null,
    committedPolygons: [...state.committedPolygons, quad],
  };
}

export function clearRegions(state: EditorState): EditorState {
  return { ...state, polygonDraft: [], committedPolygons: [], banner: null };
}

// "Iterate" feeds a returned composite back in as the next input, saving
// the old frame so undo can restore it exactly.
export function iterate(state: EditorState, compositeB64: string): EditorState {
  if (state.currentImage === null) {
    return { ...state, banner: 'nothing to iterate on' };
  }
  const entry: HistoryEntry = {
    image: state.currentImage,
    polygons: state.committedPolygons,
  };
  const history = [...state.history, entry].slice(-MAX_HISTORY);
  return {
    ...state,
    history,
    currentImage: compositeB64,
    polygonDraft: [],
    committedPolygons: [],
    banner: null,
  };
}

export function undo(state: EditorState): EditorState {
  const prior = state.history[state.history.length - 1];
  if (prior === undefined) {
    return { ...state, banner: 'nothing to undo' };
  }
  return {
    ...state,
    history: state.history.slice(0, -1),
    currentImage: prior.image,
    committedPolygons: prior.polygons,
    polygonDraft: [],
    banner: null,
  };
}
