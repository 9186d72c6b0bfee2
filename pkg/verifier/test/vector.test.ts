import { spawnSync } from 'node:child_process';
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join, resolve } from 'node:path';

import { afterAll, describe, expect, it } from 'vitest';

import { FIELD_LENGTHS, parseVector, verifyVector } from '../src/vector.js';

const repoRoot = resolve(import.meta.dirname, '../..');
const referencePath = join(repoRoot, 'vectors', 'reference.vec');
const referenceText = readFileSync(referencePath, 'utf-8');

const scratch = mkdtempSync(join(tmpdir(), 'interop-'));
afterAll(() => rmSync(scratch, { recursive: true, force: true }));

function generateWithPrimary(seed: number): string {
  const out = join(scratch, `gen-${seed}.vec`);
  const result = spawnSync(
    'python3',
    ['-m', 'sgbseal', 'vector', 'gen', out, '--seed', String(seed)],
    { cwd: repoRoot, encoding: 'utf-8' },
  );
  expect(result.status, result.stderr).toBe(0);
  return readFileSync(out, 'utf-8');
}

describe('parseVector', () => {
  it('parses the shipped reference vector', () => {
    const v = parseVector(referenceText);
    expect(v.aad.toString('hex')).toBe('e802');
    expect(v.frame.length).toBe(56);
  });

  it('rejects a missing field', () => {
    const text = referenceText
      .split('\n')
      .filter((line) => !line.startsWith('tag'))
      .join('\n');
    expect(() => parseVector(text)).toThrow(/missing field: tag/);
  });

  it('rejects wrong-length hex', () => {
    expect(() => parseVector('key = 00ff\n')).toThrow(/32 bytes/);
  });

  it('rejects non-hex values', () => {
    expect(() => parseVector('key = zz\n')).toThrow(/invalid hex/);
  });
});

describe('verifyVector', () => {
  it('passes the shipped reference vector', () => {
    expect(verifyVector(parseVector(referenceText))).toEqual({ ok: true });
  });

  const corruptible = ['plaintext', 'ciphertext', 'tag', 'frame'] as const;
  for (const field of corruptible) {
    it(`detects a corrupted ${field}`, () => {
      const v = parseVector(referenceText);
      v[field][0] ^= 0x01;
      const result = verifyVector(v);
      expect(result.ok).toBe(false);
      expect(result.failingField).toBeDefined();
    });
  }

  it('detects a corrupted key, aad, counter or timestamp via the outputs', () => {
    for (const field of ['key', 'aad', 'counter', 'timestamp'] as const) {
      const v = parseVector(referenceText);
      v[field][FIELD_LENGTHS[field] - 1] ^= 0x01;
      expect(verifyVector(v).ok).toBe(false);
    }
  });
});

describe('cross-implementation agreement', () => {
  it('accepts 100 vectors generated by the primary implementation', () => {
    for (let seed = 0; seed < 100; seed++) {
      const text = generateWithPrimary(seed);
      const result = verifyVector(parseVector(text));
      expect(result, `seed ${seed}`).toEqual({ ok: true });
    }
  });

  it('agrees with the primary on a corrupted vector', () => {
    const text = generateWithPrimary(1000);
    const v = parseVector(text);
    v.tag[3] ^= 0x80;
    expect(verifyVector(v).ok).toBe(false);

    const corruptedPath = join(scratch, 'corrupted.vec');
    const lines = Object.entries(v).map(
      ([name, buf]) => `${name} = ${buf.toString('hex')}`,
    );
    writeFileSync(corruptedPath, lines.join('\n') + '\n');
    const primary = spawnSync(
      'python3',
      ['-m', 'sgbseal', 'vector', 'verify', corruptedPath],
      { cwd: repoRoot, encoding: 'utf-8' },
    );
    expect(primary.status).not.toBe(0);
  });
});
