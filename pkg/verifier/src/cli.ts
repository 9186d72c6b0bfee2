import { readFileSync } from 'node:fs';

import { parseVector, verifyVector } from './vector.js';

const path = process.argv[2];
if (!path) {
  console.error('usage: verify <vector-file>');
  process.exit(2);
}

let result;
try {
  result = verifyVector(parseVector(readFileSync(path, 'utf-8')));
} catch (err) {
  console.error(`error: ${err instanceof Error ? err.message : err}`);
  process.exit(2);
}

if (result.ok) {
  console.log('OK');
} else {
  console.log(`MISMATCH ${result.failingField}`);
  process.exit(1);
}
