import * as fs from 'fs';
import * as os from 'os';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { renderBoxplots } from '../src/boxplots';
import { renderBuckets } from '../src/buckets';
import { parseCsv, readCsv } from '../src/csv';
import { main } from '../src/cli';

const BUCKETS = path.join(__dirname, '..', 'testdata', 'golden_buckets.csv');
const ORDERINGS = path.join(__dirname, '..', 'testdata', 'golden_orderings.csv');

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe('csv reader', () => {
  it('parses metadata comments and rows', () => {
    const table = readCsv(BUCKETS);
    expect(table.metadata.experiment).toBe('buckets');
    expect(table.metadata.mode).toBe('mecs');
    expect(table.rows.length).toBeGreaterThan(100);
    expect(Object.keys(table.rows[0])).toEqual(['measure', 'x', 'y', 'count']);
  });
});

describe('bucket figure', () => {
  it('renders one panel per measure (four for the golden file)', () => {
    const svg = renderBuckets(readCsv(BUCKETS));
    expect(count(svg, 'class="panel"')).toBe(4);
    for (const measure of ['vh', 'wl', 'nspd', 'minmax']) {
      expect(svg).toContain(`data-measure="${measure}"`);
    }
  });

  it('is byte-stable across reruns', () => {
    const a = renderBuckets(readCsv(BUCKETS));
    const b = renderBuckets(readCsv(BUCKETS));
    expect(a).toBe(b);
  });

  it('single-measure table gives a single panel', () => {
    const table = parseCsv('measure,x,y,count\nvh,0.5,3,2\nvh,0.6,4,1\n');
    const svg = renderBuckets(table);
    expect(count(svg, 'class="panel"')).toBe(1);
  });

  it('empty table renders a warning figure', () => {
    const svg = renderBuckets(parseCsv('measure,x,y,count\n'));
    expect(svg).toContain('warning: no bucket rows');
  });

  it('names the missing column', () => {
    const table = parseCsv('measure,x,y\nvh,0.5,3\n');
    expect(() => renderBuckets(table)).toThrow('missing column: count');
  });
});

describe('boxplot figure', () => {
  it('renders eight boxes for the golden orderings file', () => {
    const svg = renderBoxplots(readCsv(ORDERINGS));
    expect(count(svg, 'class="box"')).toBe(8);
    expect(svg).toContain('data-config="minmax^R"');
    expect(svg).toContain('stroke-dasharray');  // dotted mean lines
  });

  it('is byte-stable across reruns', () => {
    const a = renderBoxplots(readCsv(ORDERINGS), { logScale: true });
    const b = renderBoxplots(readCsv(ORDERINGS), { logScale: true });
    expect(a).toBe(b);
  });

  it('degenerate single-run boxes render without crashing', () => {
    const table = parseCsv(
      'measure,prune,runtime_seconds,timed_out\nvh,0,0.5,0\nvh,1,0.4,0\n',
    );
    const svg = renderBoxplots(table);
    expect(count(svg, 'class="box"')).toBe(2);
  });

  it('censored rows become capped markers with counts', () => {
    const table = parseCsv(
      'measure,prune,runtime_seconds,timed_out\n' +
        'vh,0,0.5,0\nvh,0,1.5,1\nvh,0,2.5,1\n',
    );
    const svg = renderBoxplots(table);
    expect(svg).toContain('2 censored');
  });

  it('names the missing column', () => {
    const table = parseCsv('measure,prune,runtime_seconds\nvh,0,0.5\n');
    expect(() => renderBoxplots(table)).toThrow('missing column: timed_out');
  });
});

describe('cli', () => {
  it('writes both figure kinds and reruns are identical', () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), 'figs-'));
    const bucketsOut = path.join(dir, 'fig1.svg');
    const boxesOut = path.join(dir, 'fig2.svg');
    expect(main(['buckets', '--csv', BUCKETS, '--out', bucketsOut])).toBe(0);
    expect(main(['boxplots', '--csv', ORDERINGS, '--out', boxesOut, '--log'])).toBe(0);
    const first = fs.readFileSync(bucketsOut, 'utf8');
    expect(main(['buckets', '--csv', BUCKETS, '--out', bucketsOut])).toBe(0);
    expect(fs.readFileSync(bucketsOut, 'utf8')).toBe(first);
    expect(fs.readFileSync(boxesOut, 'utf8')).toContain('<svg');
  });

  it('fails with exit code 1 on a bad csv', () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), 'figs-'));
    const bad = path.join(dir, 'bad.csv');
    fs.writeFileSync(bad, 'measure,x,y\nvh,0.5,3\n');
    expect(main(['buckets', '--csv', bad, '--out', path.join(dir, 'o.svg')])).toBe(1);
  });
});
