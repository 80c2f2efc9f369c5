// The canvas may be CSS-scaled; clicks arrive in client coordinates and
// every request must carry original-image pixels. This mapping is the
// only place the conversion happens.

import { Point } from './wire.js';

export interface CanvasRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

export function clientToImage(
  clientX: number,
  clientY: number,
  rect: CanvasRect,
  imageWidth: number,
  imageHeight: number,
): Point {
  const x = ((clientX - rect.left) * imageWidth) / rect.width;
  const y = ((clientY - rect.top) * imageHeight) / rect.height;
  return [
    Math.min(Math.max(x, 0), imageWidth),
    Math.min(Math.max(y, 0), imageHeight),
  ];
}

export function imageToCanvas(
  point: Point,
  rect: CanvasRect,
  imageWidth: number,
  imageHeight: number,
): [number, number] {
  return [
    (point[0] * rect.width) / imageWidth,
    (point[1] * rect.height) / imageHeight,
  ];
}
