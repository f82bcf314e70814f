import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    // the e2e file builds an index and boots the real API server
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
