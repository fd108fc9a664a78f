/** Minimal deterministic SVG assembly: plain string building, fixed
 *  precision, no timestamps, so identical inputs give identical bytes. */

export function fmt(x: number): string {
  return Number.isInteger(x) ? String(x) : x.toFixed(2);
}

export function tag(
  name: string,
  attrs: Record<string, string | number>,
  body = '',
): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === 'number' ? fmt(v) : v}"`)
    .join(' ');
  return body === ''
    ? `<${name} ${parts}/>`
    : `<${name} ${parts}>${body}</${name}>`;
}

export function text(
  x: number,
  y: number,
  content: string,
  extra: Record<string, string | number> = {},
): string {
  return tag('text', { x, y, 'font-size': 10, 'font-family': 'sans-serif', ...extra }, escapeXml(content));
}

export function escapeXml(s: string): string {
  return s
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function document(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}">\n` +
    body +
    '\n</svg>\n'
  );
}

export interface Scale {
  (value: number): number;
  ticks: number[];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
  tickCount = 5,
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  const step = span / tickCount;
  scale.ticks = Array.from({ length: tickCount + 1 }, (_, i) => d0 + i * step);
  return scale;
}

export function logScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const lo = Math.log10(Math.max(domain[0], 1e-9));
  const hi = Math.log10(Math.max(domain[1], domain[0] * 10, 1e-8));
  const [r0, r1] = range;
  const span = hi - lo || 1;
  const scale = ((value: number) =>
    r0 + ((Math.log10(Math.max(value, 1e-9)) - lo) / span) * (r1 - r0)) as Scale;
  const ticks: number[] = [];
  for (let p = Math.floor(lo); p <= Math.ceil(hi); p += 1) {
    ticks.push(10 ** p);
  }
  scale.ticks = ticks;
  return scale;
}
