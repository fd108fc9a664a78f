import { CsvTable, requireColumns } from './csv';
import { document, fmt, linearScale, logScale, Scale, tag, text } from './svg';

const BOX_WIDTH = 46;
const GAP = 18;
const HEIGHT = 360;
const MARGIN = { top: 30, right: 20, bottom: 64, left: 64 };

export interface BoxplotOptions {
  logScale?: boolean;
}

interface Config {
  measure: string;
  prune: boolean;
  runtimes: number[];
  censored: number;
}

const MEASURE_ORDER = ['vh', 'wl', 'nspd', 'minmax', 'input', 'random'];

/** One box per ordering/pruning configuration, the no-removal and removal
 *  variants side by side, with a dotted line at the mean.  Censored
 *  (timed out) rows render as a capped marker with a count. */
export function renderBoxplots(table: CsvTable, options: BoxplotOptions = {}): string {
  requireColumns(table, ['measure', 'prune', 'runtime_seconds', 'timed_out']);
  const byConfig = new Map<string, Config>();
  for (const row of table.rows) {
    const key = `${row.measure}|${row.prune}`;
    let config = byConfig.get(key);
    if (!config) {
      config = { measure: row.measure, prune: row.prune === '1', runtimes: [], censored: 0 };
      byConfig.set(key, config);
    }
    if (row.timed_out === '1') {
      config.censored += 1;
    } else {
      config.runtimes.push(Number(row.runtime_seconds));
    }
  }
  const configs = [...byConfig.values()].sort((a, b) => {
    const ma = MEASURE_ORDER.indexOf(a.measure);
    const mb = MEASURE_ORDER.indexOf(b.measure);
    if (ma !== mb) return ma - mb;
    return Number(a.prune) - Number(b.prune);
  });

  const width = MARGIN.left + configs.length * (BOX_WIDTH + GAP) + MARGIN.right;
  if (configs.length === 0) {
    const body =
      tag('rect', { x: 0, y: 0, width: 320, height: 200, fill: 'white' }) +
      text(160, 100, 'warning: no runtime rows', { 'text-anchor': 'middle', fill: '#aa3333' });
    return document(320, 200, body);
  }

  const values = configs.flatMap((c) => c.runtimes);
  const lo = Math.min(...values, 1e-3);
  const hi = Math.max(...values, lo * 10);
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  const sy: Scale = options.logScale
    ? logScale([lo, hi], [y0, y1])
    : linearScale([0, hi], [y0, y1]);

  const parts: string[] = [];
  parts.push(tag('rect', { x: 0, y: 0, width, height: HEIGHT, fill: 'white' }));
  for (const t of sy.ticks) {
    parts.push(tag('line', { x1: MARGIN.left - 4, y1: sy(t), x2: width - MARGIN.right, y2: sy(t), stroke: '#eeeeee' }));
    parts.push(text(MARGIN.left - 8, sy(t) + 3, options.logScale ? String(t) : fmt(t), {
      'text-anchor': 'end', 'font-size': 8,
    }));
  }
  parts.push(tag('line', { x1: MARGIN.left, y1: y0, x2: MARGIN.left, y2: y1, stroke: '#333333' }));
  parts.push(text(14, y1 - 10, options.logScale ? 'runtime [s, log]' : 'runtime [s]', { 'font-size': 9 }));

  configs.forEach((config, index) => {
    const x = MARGIN.left + GAP / 2 + index * (BOX_WIDTH + GAP);
    parts.push(box(config, x, sy, y0));
  });
  return document(width, HEIGHT, parts.join('\n'));
}

function quantile(sorted: number[], q: number): number {
  if (sorted.length === 0) return 0;
  const pos = (sorted.length - 1) * q;
  const base = Math.floor(pos);
  const rest = pos - base;
  const next = sorted[Math.min(base + 1, sorted.length - 1)];
  return sorted[base] + rest * (next - sorted[base]);
}

function box(config: Config, x: number, sy: Scale, baseline: number): string {
  const label = config.prune ? `${config.measure}^R` : config.measure;
  const parts: string[] = [];
  const mid = x + BOX_WIDTH / 2;
  if (config.runtimes.length > 0) {
    const sorted = [...config.runtimes].sort((a, b) => a - b);
    const q1 = quantile(sorted, 0.25);
    const q2 = quantile(sorted, 0.5);
    const q3 = quantile(sorted, 0.75);
    const mean = sorted.reduce((a, b) => a + b, 0) / sorted.length;
    const wLow = sorted[0];
    const wHigh = sorted[sorted.length - 1];
    parts.push(tag('line', { x1: mid, y1: sy(wLow), x2: mid, y2: sy(q1), stroke: '#333333' }));
    parts.push(tag('line', { x1: mid, y1: sy(q3), x2: mid, y2: sy(wHigh), stroke: '#333333' }));
    parts.push(tag('line', { x1: mid - 10, y1: sy(wLow), x2: mid + 10, y2: sy(wLow), stroke: '#333333' }));
    parts.push(tag('line', { x1: mid - 10, y1: sy(wHigh), x2: mid + 10, y2: sy(wHigh), stroke: '#333333' }));
    parts.push(tag('rect', {
      x, y: sy(q3), width: BOX_WIDTH, height: Math.max(sy(q1) - sy(q3), 0.5),
      fill: '#cdd9ec', stroke: '#333333',
    }));
    parts.push(tag('line', { x1: x, y1: sy(q2), x2: x + BOX_WIDTH, y2: sy(q2), stroke: '#333333', 'stroke-width': '1.5' }));
    parts.push(tag('line', {
      x1: x, y1: sy(mean), x2: x + BOX_WIDTH, y2: sy(mean),
      stroke: '#aa3333', 'stroke-dasharray': '3,2',
    }));
  }
  if (config.censored > 0) {
    const capY = sy.ticks.length > 0 ? sy(sy.ticks[sy.ticks.length - 1]) : 20;
    parts.push(tag('path', {
      d: `M ${fmt(mid - 6)} ${fmt(capY + 10)} L ${fmt(mid + 6)} ${fmt(capY + 10)} L ${fmt(mid)} ${fmt(capY)} Z`,
      fill: '#aa3333',
    }));
    parts.push(text(mid, capY + 22, `${config.censored} censored`, {
      'text-anchor': 'middle', 'font-size': 7, fill: '#aa3333',
    }));
  }
  parts.push(text(mid, baseline + 16, label, { 'text-anchor': 'middle', 'font-size': 9 }));
  return tag('g', { class: 'box', 'data-config': label }, parts.join(''));
}
