// Wire types for the erase service. Polygons travel as image-space
// coordinates; the server owns rasterization.

export type Point = [number, number];

export interface EraseOptions {
  dilation_radius?: number;
  mask_threshold?: number;
  return_intermediates?: boolean;
}

export interface EraseRequestWire {
  image: string; // base64 PNG
  polygons?: Point[][];
  mask?: string; // base64 PNG
  all?: true;
  options?: EraseOptions;
}

export interface Intermediates {
  refined_mask: string;
  coarse: string;
  coarse_composite: string;
  fine: string;
}

export interface EraseResponseWire {
  composite_fine: string;
  intermediates?: Intermediates;
  timing_ms: number;
  model_info: { checkpoint_id: string; step: number };
}

export interface ErrorWire {
  error: string;
  detail: string;
}

export type Region =
  | { kind: 'polygons'; polygons: Point[][] }
  | { kind: 'all' };

// One builder funnels every outgoing request so the shape can't drift
// from the schema checked in under schema/.
export function buildEraseRequest(
  imageB64: string,
  region: Region,
  options?: EraseOptions,
): EraseRequestWire {
  const req: EraseRequestWire = { image: imageB64 };
  if (region.kind === 'all') {
    req.all = true;
  } else {
    if (region.polygons.length === 0) {
      throw new Error('no polygons committed');
    }
    req.polygons = region.polygons.map((poly) =>
      poly.map(([x, y]) => [x, y] as Point),
    );
  }
  if (options !== undefined) {
    req.options = options;
  }
  return req;
}
