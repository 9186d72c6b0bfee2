/**
 * Independent re-derivation of telemetry AEAD test vectors.
 *
 * Shares nothing with the Python implementation except the flat
 * `name = hexvalue` vector-file format; all crypto goes through Node's
 * built-in AES-256-GCM. Exists to catch implementation-specific mistakes
 * on either side.
 */

import { createCipheriv, createDecipheriv } from 'node:crypto';

export const FIELD_LENGTHS: Record<string, number> = {
  key: 32,
  aad: 2,
  counter: 4,
  timestamp: 8,
  plaintext: 26,
  ciphertext: 26,
  tag: 16,
  frame: 56,
};

export interface Vector {
  key: Buffer;
  aad: Buffer;
  counter: Buffer;
  timestamp: Buffer;
  plaintext: Buffer;
  ciphertext: Buffer;
  tag: Buffer;
  frame: Buffer;
}

export interface VerifyResult {
  ok: boolean;
  /** First field whose re-derived value differs, when ok is false. */
  failingField?: string;
}

export function parseVector(text: string): Vector {
  const fields: Partial<Record<keyof Vector, Buffer>> = {};
  const lines = text.split(/\r?\n/);
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === '' || line.startsWith('#')) continue;
    const eq = line.indexOf('=');
    if (eq < 0) throw new Error(`line ${i + 1}: expected \`name = hexvalue\``);
    const name = line.slice(0, eq).trim();
    const value = line.slice(eq + 1).trim();
    if (!(name in FIELD_LENGTHS)) {
      throw new Error(`line ${i + 1}: unknown field '${name}'`);
    }
    if (!/^([0-9a-f]{2})*$/.test(value)) {
      throw new Error(`line ${i + 1}: invalid hex for '${name}'`);
    }
    const data = Buffer.from(value, 'hex');
    if (data.length !== FIELD_LENGTHS[name]) {
      throw new Error(
        `line ${i + 1}: '${name}' must be ${FIELD_LENGTHS[name]} bytes, got ${data.length}`,
      );
    }
    fields[name as keyof Vector] = data;
  }
  for (const name of Object.keys(FIELD_LENGTHS)) {
    if (!(name in fields)) throw new Error(`missing field: ${name}`);
  }
  return fields as Vector;
}

function sealAesGcm(
  key: Buffer,
  iv: Buffer,
  plaintext: Buffer,
  aad: Buffer,
): { body: Buffer; tag: Buffer } {
  const cipher = createCipheriv('aes-256-gcm', key, iv, { authTagLength: 16 });
  cipher.setAAD(aad);
  const body = Buffer.concat([cipher.update(plaintext), cipher.final()]);
  return { body, tag: cipher.getAuthTag() };
}

function openAesGcm(
  key: Buffer,
  iv: Buffer,
  body: Buffer,
  tag: Buffer,
  aad: Buffer,
): Buffer | null {
  const decipher = createDecipheriv('aes-256-gcm', key, iv, { authTagLength: 16 });
  decipher.setAAD(aad);
  decipher.setAuthTag(tag);
  try {
    return Buffer.concat([decipher.update(body), decipher.final()]);
  } catch {
    return null;
  }
}

/**
 * Re-derive every output field from the vector's inputs and compare:
 * ciphertext, tag, the full frame concatenation, and the decrypted
 * plaintext.
 */
export function verifyVector(v: Vector): VerifyResult {
  const iv = Buffer.concat([v.counter, v.timestamp]);
  const { body, tag } = sealAesGcm(v.key, iv, v.plaintext, v.aad);
  if (!body.equals(v.ciphertext)) return { ok: false, failingField: 'ciphertext' };
  if (!tag.equals(v.tag)) return { ok: false, failingField: 'tag' };
  const frame = Buffer.concat([v.aad, iv, body, tag]);
  if (!frame.equals(v.frame)) return { ok: false, failingField: 'frame' };
  const plaintext = openAesGcm(v.key, iv, v.ciphertext, v.tag, v.aad);
  if (plaintext === null) return { ok: false, failingField: 'tag' };
  if (!plaintext.equals(v.plaintext)) return { ok: false, failingField: 'plaintext' };
  return { ok: true };
}
