// Payload shapes of the /api/v1 analytics surface.
export {};
