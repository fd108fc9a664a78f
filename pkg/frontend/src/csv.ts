import * as fs from 'fs';
import Papa from 'papaparse';

export interface CsvTable {
  rows: Record<string, string>[];
  metadata: Record<string, string>;
  columns: string[];
}

/** Read a benchmark CSV: leading `# key=value` comment lines carry
 *  metadata, the remainder is a regular header + rows table. */
export function readCsv(path: string): CsvTable {
  return parseCsv(fs.readFileSync(path, 'utf8'));
}

export function parseCsv(text: string): CsvTable {
  const metadata: Record<string, string> = {};
  const body: string[] = [];
  for (const line of text.split(/\r?\n/)) {
    if (line.startsWith('#')) {
      const stripped = line.slice(1).trim();
      const eq = stripped.indexOf('=');
      if (eq > 0) {
        metadata[stripped.slice(0, eq).trim()] = stripped.slice(eq + 1).trim();
      }
    } else if (line.trim() !== '') {
      body.push(line);
    }
  }
  const parsed = Papa.parse<Record<string, string>>(body.join('\n'), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new Error(`CSV parse error at row ${first.row}: ${first.message}`);
  }
  return { rows: parsed.data, metadata, columns: parsed.meta.fields ?? [] };
}

/** Fail fast with the offending column named, per the figure contract. */
export function requireColumns(table: CsvTable, columns: string[]): void {
  for (const column of columns) {
    if (!table.columns.includes(column)) {
      throw new Error(`missing column: ${column}`);
    }
  }
}
