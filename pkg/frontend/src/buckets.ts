import { CsvTable, requireColumns } from './csv';
import { document, fmt, linearScale, tag, text } from './svg';

const PANEL_WIDTH = 320;
const PANEL_HEIGHT = 240;
const MARGIN = { top: 28, right: 14, bottom: 40, left: 52 };
const COLUMNS = 2;

export interface BucketOptions {
  /** scale point radius by bucket population */
  sizeByCount?: boolean;
}

interface Point {
  x: number;
  y: number;
  count: number;
}

/** One scatter panel per similarity measure: bucket centers on the x axis
 *  (always [0, 1]), average clique counts on the y axis. */
export function renderBuckets(table: CsvTable, options: BucketOptions = {}): string {
  requireColumns(table, ['measure', 'x', 'y', 'count']);
  const byMeasure = new Map<string, Point[]>();
  for (const row of table.rows) {
    const point = {
      x: Number(row.x),
      y: Number(row.y),
      count: Number(row.count),
    };
    const list = byMeasure.get(row.measure) ?? [];
    list.push(point);
    byMeasure.set(row.measure, list);
  }

  const measures = [...byMeasure.keys()];
  if (measures.length === 0) {
    const body =
      tag('rect', { x: 0, y: 0, width: PANEL_WIDTH, height: PANEL_HEIGHT, fill: 'white' }) +
      text(PANEL_WIDTH / 2, PANEL_HEIGHT / 2, 'warning: no bucket rows', {
        'text-anchor': 'middle',
        fill: '#aa3333',
      });
    return document(PANEL_WIDTH, PANEL_HEIGHT, body);
  }

  const rows = Math.ceil(measures.length / COLUMNS);
  const width = Math.min(measures.length, COLUMNS) * PANEL_WIDTH;
  const height = rows * PANEL_HEIGHT;
  const yMax = Math.max(...[...byMeasure.values()].flat().map((p) => p.y));
  const note = table.metadata['normalization'];

  const panels = measures.map((measure, index) => {
    const px = (index % COLUMNS) * PANEL_WIDTH;
    const py = Math.floor(index / COLUMNS) * PANEL_HEIGHT;
    return panel(measure, byMeasure.get(measure)!, px, py, yMax, options);
  });

  let body = panels.join('\n');
  if (note) {
    body += '\n' + text(6, height - 4, `normalization: ${note}`, { fill: '#666666', 'font-size': 8 });
  }
  return document(width, height, body);
}

function panel(
  measure: string,
  points: Point[],
  px: number,
  py: number,
  yMax: number,
  options: BucketOptions,
): string {
  const x0 = px + MARGIN.left;
  const x1 = px + PANEL_WIDTH - MARGIN.right;
  const y0 = py + PANEL_HEIGHT - MARGIN.bottom;
  const y1 = py + MARGIN.top;
  const sx = linearScale([0, 1], [x0, x1]);
  const sy = linearScale([0, yMax], [y0, y1]);

  const parts: string[] = [];
  parts.push(tag('rect', {
    x: px, y: py, width: PANEL_WIDTH, height: PANEL_HEIGHT,
    fill: 'white', stroke: '#cccccc',
  }));
  parts.push(text(px + PANEL_WIDTH / 2, py + 16, measure, {
    'text-anchor': 'middle', 'font-size': 12, 'font-weight': 'bold',
  }));
  for (const t of sx.ticks) {
    parts.push(tag('line', { x1: sx(t), y1: y0, x2: sx(t), y2: y0 + 4, stroke: '#333333' }));
    parts.push(text(sx(t), y0 + 16, fmt(t), { 'text-anchor': 'middle', 'font-size': 8 }));
  }
  for (const t of sy.ticks) {
    parts.push(tag('line', { x1: x0 - 4, y1: sy(t), x2: x0, y2: sy(t), stroke: '#333333' }));
    parts.push(text(x0 - 6, sy(t) + 3, fmt(t), { 'text-anchor': 'end', 'font-size': 8 }));
  }
  parts.push(tag('line', { x1: x0, y1: y0, x2: x1, y2: y0, stroke: '#333333' }));
  parts.push(tag('line', { x1: x0, y1: y0, x2: x0, y2: y1, stroke: '#333333' }));
  parts.push(text(px + PANEL_WIDTH / 2, y0 + 30, 'normalized similarity', {
    'text-anchor': 'middle', 'font-size': 9,
  }));
  parts.push(text(px + 12, y1 - 8, 'mean maximal connected cliques', { 'font-size': 9 }));

  const maxCount = Math.max(...points.map((p) => p.count));
  const sorted = [...points].sort((a, b) => a.x - b.x || a.y - b.y);
  const panelPoints = sorted.map((p) => {
    const radius = options.sizeByCount ? 1 + 3 * Math.sqrt(p.count / maxCount) : 2;
    return tag('circle', {
      cx: sx(p.x), cy: sy(p.y), r: radius,
      fill: '#3366aa', 'fill-opacity': '0.55',
    });
  });
  parts.push(tag('g', { class: 'panel', 'data-measure': measure }, panelPoints.join('')));
  return parts.join('\n');
}
