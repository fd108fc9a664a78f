import * as fs from 'fs';
import * as path from 'path';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';
import { renderBoxplots } from './boxplots';
import { renderBuckets } from './buckets';
import { readCsv } from './csv';

/** Write atomically so a crashed run never leaves a half figure. */
function writeAtomic(target: string, content: string): void {
  const tmp = path.join(
    path.dirname(target),
    `.${path.basename(target)}.tmp`,
  );
  fs.writeFileSync(tmp, content);
  fs.renameSync(tmp, target);
}

export function main(argv: string[]): number {
  const parser = yargs(argv)
    .command(
      'buckets',
      'render the similarity-vs-clique-count bucket scatter',
      (y) =>
        y
          .option('csv', { type: 'string', demandOption: true })
          .option('out', { type: 'string', demandOption: true })
          .option('size-by-count', { type: 'boolean', default: false }),
      () => undefined,
    )
    .command(
      'boxplots',
      'render per-configuration runtime box plots',
      (y) =>
        y
          .option('csv', { type: 'string', demandOption: true })
          .option('out', { type: 'string', demandOption: true })
          .option('log', { type: 'boolean', default: false }),
      () => undefined,
    )
    .demandCommand(1)
    .strict()
    .exitProcess(false);

  const args = parser.parseSync();
  const kind = String(args._[0]);
  try {
    const table = readCsv(String(args.csv));
    const svg =
      kind === 'buckets'
        ? renderBuckets(table, { sizeByCount: Boolean(args['size-by-count']) })
        : renderBoxplots(table, { logScale: Boolean(args.log) });
    writeAtomic(String(args.out), svg);
    process.stdout.write(`wrote ${args.out}\n`);
    return 0;
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
}

if (require.main === module) {
  process.exit(main(hideBin(process.argv)));
}
